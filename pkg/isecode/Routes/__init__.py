# isecode/Routes/__init__.py
