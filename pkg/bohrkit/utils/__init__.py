"""Utility modules for BOHRKIT."""
