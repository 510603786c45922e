"""The directory containing the tests."""
