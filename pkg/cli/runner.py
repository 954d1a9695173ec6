# cli/runner.py

"""Run a subcommand from an argv list and return its exit code, without exiting the process."""

import sys

from django.core.management import call_command
from django.core.management.base import CommandError

SUBCOMMANDS = ('info', 'normalize', 'k0', 'iso', 'bundle', 'orbits', 'tau-orbits', 'tilting', 'selftest')


def run(argv, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    if not argv or argv[0] not in SUBCOMMANDS:
        stderr.write(f"error: expected one of {', '.join(SUBCOMMANDS)}\n")
        return 1
    name = argv[0].replace('-', '_')
    try:
        call_command(name, *argv[1:], stdout=stdout, stderr=stderr)
    except CommandError as exc:
        stderr.write(f"error: {exc}\n")
        return exc.returncode
    return 0
