import sys

from app.core.config import settings

# Comp at Glue and U unfolds into deeply nested terms
if sys.getrecursionlimit() < settings.RECURSION_LIMIT:
    sys.setrecursionlimit(settings.RECURSION_LIMIT)
