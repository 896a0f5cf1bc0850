from .writers import FORMATS, render, write_text
from .tables import (
    EXPORTS, cayley_table, csv_word, dn_listing, dn_table, element_listing, endo_listing, kn_table, mn_listing,
    rules_listing
)
