"""spackd test suite."""
