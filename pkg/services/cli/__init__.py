"""Batch front-end: enumeration, verification suites and transition-matrix dumps."""
