"""BOHRKIT modules package."""
