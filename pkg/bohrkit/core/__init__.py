"""Core modules for BOHRKIT."""
