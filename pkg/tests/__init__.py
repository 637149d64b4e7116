"""Test package for the paraboson Fock space toolkit."""
