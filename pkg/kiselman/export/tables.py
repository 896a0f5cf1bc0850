""" Listings and Cayley tables of K_n, M_n, D_n and End(K_n)

Every builder returns (payload, rows, columns): a JSON document plus flat records for csv / table output.
"""

import logging
from ..element import format_word, word_to_csv
from ..errors import VerificationError
from ..matrix import bool_mul, enumerate_dn, to_csv_bits, to_flat
from ..morphism import endomorphism_to_matrix, phi
from ..semigroup import idempotent_word
from ..subset import subset_to_indices

EXPORTS = ("elements", "kn-table", "dn", "dn-table", "mn", "endos", "rules")

logger = logging.getLogger(__name__)


def csv_word(word):
    return word_to_csv(word) if word else "e"


def csv_sequence(parts):
    return "|".join(word_to_csv(subset_to_indices(bits)) if bits else "-" for bits in parts)


def element_listing(sg, elements):
    payload = {"n": sg.n, "count": len(elements), "elements": [list(x.nf) for x in elements]}
    rows = [{"index": i, "word": csv_word(x.nf), "display": format_word(x.nf)} for i, x in enumerate(elements)]
    return payload, rows, ["index", "word", "display"]


def cayley_table(elements, multiply, name):
    """ The Cayley table of a finite monoid as indices into its element listing

    :param elements: the elements in listing order
    :type elements: List[object]
    :param multiply: the binary operation
    :type multiply: Callable[[object, object], object]
    :param name: the monoid name used in error messages
    :type name: str
    :return: table[i][j] is the index of elements[i] * elements[j]
    :rtype: List[List[int]]
    """

    position = {x: i for i, x in enumerate(elements)}
    table = []
    for a in elements:
        row = []
        for b in elements:
            c = multiply(a, b)
            if c not in position:
                raise VerificationError("Error: %r * %r = %r falls outside the listed elements of %s." % (a, b, c, name))
            row.append(position[c])
        table.append(row)
    logger.info("%s Cayley table: %d x %d, closed." % (name, len(elements), len(elements)))
    return table


def _table_rows(labels, table):
    columns = ["element"] + [str(i) for i in range(len(labels))]
    rows = []
    for label, row in zip(labels, table):
        record = {"element": label}
        record.update({str(j): value for j, value in enumerate(row)})
        rows.append(record)
    return rows, columns


def kn_table(sg, elements):
    table = cayley_table(elements, sg.multiply, "K_%d" % (sg.n))
    payload = {"n": sg.n, "elements": [list(x.nf) for x in elements], "table": table}
    rows, columns = _table_rows([csv_word(x.nf) for x in elements], table)
    return payload, rows, columns


def dn_listing(n):
    members = enumerate_dn(n)
    payload = {"n": n, "count": len(members), "matrices": [m.to_rows() for m in members]}
    rows = [{"flat": str(to_flat(m)), "bits": to_csv_bits(m)} for m in members]
    return payload, rows, ["flat", "bits"]


def dn_table(n):
    members = enumerate_dn(n)
    table = cayley_table(members, bool_mul, "D_%d" % (n))
    payload = {"n": n, "matrices": [m.to_rows() for m in members], "table": table}
    rows, columns = _table_rows([to_csv_bits(m) for m in members], table)
    return payload, rows, columns


def mn_listing(n, sequences):
    payload = {"n": n, "count": len(sequences), "sequences": [s.to_indices() for s in sequences]}
    rows = [{"index": i, "sequence": csv_sequence(s.parts)} for i, s in enumerate(sequences)]
    return payload, rows, ["index", "sequence"]


def endo_listing(n, endos):
    """ End(K_n) in its three representations: content tuple, monotone sequence and matrix

    """
    payload = {"n": n, "count": len(endos), "endomorphisms": [f.to_dict() for f in endos]}
    rows = []
    for i, f in enumerate(endos):
        matrix = endomorphism_to_matrix(f)
        rows.append({
            "index": i,
            "images": " ".join(format_word(idempotent_word(bits)) for bits in f.images),
            "sequence": csv_sequence(phi(f).parts),
            "matrix": to_csv_bits(matrix),
        })
    return payload, rows, ["index", "images", "sequence", "matrix"]


def rules_listing(rs):
    payload = rs.to_dict()
    rows = [{"lhs": csv_word(lhs), "rhs": csv_word(rhs)} for lhs, rhs in rs.rules]
    return payload, rows, ["lhs", "rhs"]
