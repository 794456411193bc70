# Core module: engines are imported by name, e.g. ``from core import abacus``
