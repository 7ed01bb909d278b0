"""
Entry point for running the ``fan`` command outside ``manage.py``.

    python -m tropical.cli intersect --plane plane.json --a a.json --b b.json
"""
import sys

from fanapprox import configure_settings
from tropical.exceptions import EXIT_INPUT_ERROR, EXIT_INTERNAL, EXIT_OK, EXIT_PRECONDITION


def run(argv=None, stdout=None, stderr=None):
    """Run one subcommand and return its exit code (0, 2, 3 or 4)."""
    configure_settings()
    import django
    from django.core.management import call_command
    from django.core.management.base import CommandError

    django.setup()
    argv = sys.argv[1:] if argv is None else list(argv)
    stderr = stderr or sys.stderr
    try:
        call_command("fan", *argv, stdout=stdout or sys.stdout, stderr=stderr)
    except CommandError as exc:
        stderr.write(f"{exc}\n")
        # argparse usage errors arrive with the default return code 1
        if exc.returncode in (EXIT_PRECONDITION, EXIT_INTERNAL):
            return exc.returncode
        return EXIT_INPUT_ERROR
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
