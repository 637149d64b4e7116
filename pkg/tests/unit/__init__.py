"""Unit tests for combinatorics, exact linear algebra, the Fock space, the bases and the MZ/GZ operators."""
