"""Configuration, enums and check results shared across services."""
