from .system import RewriteSystem, make_presentation, defining_relations
from .completion import complete, critical_pairs, relations_hold, DEFAULT_MAX_RULES
