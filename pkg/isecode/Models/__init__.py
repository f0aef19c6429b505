# isecode/Models/__init__.py
