# isecode/Schemas/__init__.py
