from .kiselman import KiselmanSemigroup, get_semigroup, idempotent_word, DEFAULT_MAX_ELEMENTS
