"""Allow ``python -m broom_turan``."""

from .cli import main

main()
