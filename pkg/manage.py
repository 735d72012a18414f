#!/usr/bin/env python
"""Entry point for the salemk3 management commands (analyze, pi, scan, ...)."""
import os
import sys


def main():
    """Run a salemk3 command."""
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'config.settings')
    try:
        from django.core.management import execute_from_command_line
    except ImportError as exc:
        raise ImportError(
            "Couldn't import Django. Install the packages listed in "
            "requirements.txt into the active environment."
        ) from exc
    execute_from_command_line(sys.argv)


if __name__ == '__main__':
    main()
