"""
CLI Module
Command-line front end: REPL, script evaluation and one-shot solve/check.
"""

from .main import CliConfig, ExitCode, Mode, OutputFormat, Strictness, main, parse_config, run

__all__ = [
    'CliConfig',
    'ExitCode',
    'Mode',
    'OutputFormat',
    'Strictness',
    'main',
    'parse_config',
    'run',
]
