"""End-to-end tests through main(argv), including the worked n = 3 block."""
