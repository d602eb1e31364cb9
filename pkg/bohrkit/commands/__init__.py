"""Command handlers for BOHRKIT CLI."""
