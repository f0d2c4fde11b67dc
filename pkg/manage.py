#!/usr/bin/env python
"""Run symtest from a checkout: ``./manage.py check form.txt``."""
import sys


def main():
    try:
        from symtest.cli import main as symtest_main
        import django  # noqa: F401
    except ImportError as exc:
        raise ImportError(
            "Couldn't import Django. Are you sure it's installed and "
            "available on your PYTHONPATH environment variable? Did you "
            "forget to activate a virtual environment?"
        ) from exc
    symtest_main(sys.argv)


if __name__ == '__main__':
    main()
