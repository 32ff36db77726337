"""Shortcut for `backend/manage.py domset ...` from the repository root."""
import os
import sys
from pathlib import Path

BACKEND = Path(__file__).resolve().parent / 'backend'


def main(argv=None):
    sys.path.insert(0, str(BACKEND))
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'sparsedom.settings')

    from django.core.management import execute_from_command_line

    args = sys.argv[1:] if argv is None else argv
    execute_from_command_line(['manage.py', 'domset', *args])


if __name__ == "__main__":
    main()
