"""Bundled condition schemas and example datasets."""
