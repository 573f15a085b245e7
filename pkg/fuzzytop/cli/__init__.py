"""
Command Line Interface Package.

This package provides the command-line front end of the census.
"""

from fuzzytop.cli.census import main as run_census

__all__ = ["run_census"]
