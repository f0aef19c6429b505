# isecode/tests/__init__.py

import os

os.environ["ISECODE_LOG_LEVEL"] = "WARNING"
os.environ["ISECODE_SEARCH_TIMEOUT_MS"] = "120000"
os.environ["ISECODE_CORRELATION_TRIALS"] = "1000"
os.environ["TESTING"] = "True"
