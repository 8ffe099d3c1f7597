"""Command-line interface"""

from src.cli.commands import EXIT_FAIL, EXIT_PASS, EXIT_USAGE, Ideal4App, build_parser, main

__all__ = ["EXIT_FAIL", "EXIT_PASS", "EXIT_USAGE", "Ideal4App", "build_parser", "main"]
