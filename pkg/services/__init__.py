"""Paraboson Fock space services: combinatorics, linear algebra, Fock operators, bases, MZ operators and the CLI."""
