"""Configuration, logging, artifact paths and report writing."""
