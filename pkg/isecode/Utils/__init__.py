# isecode/Utils/__init__.py
