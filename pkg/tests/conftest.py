from fractions import Fraction

from hypothesis import strategies as st

from dshuffle.words import NcPoly


def words(min_size=0, max_size=6):
    return st.text(alphabet="xy", min_size=min_size, max_size=max_size)


def y_words(min_size=1, max_size=5):
    """Nonempty words ending in y."""
    return st.builds(lambda w: w + "y", st.text(alphabet="xy", max_size=max_size - 1))


def rationals():
    return st.builds(Fraction,
                     st.integers(min_value=-9, max_value=9),
                     st.integers(min_value=1, max_value=9))


def nc_polys(max_terms=4, max_word=5):
    return st.builds(
        NcPoly,
        st.dictionaries(words(max_size=max_word), rationals(), max_size=max_terms),
    )


def homogeneous_polys(weight, max_terms=4):
    return st.builds(
        NcPoly,
        st.dictionaries(words(min_size=weight, max_size=weight), rationals(),
                        max_size=max_terms),
    )


def rref_rank(rows):
    """Plain dense elimination, independent of the package's kernel path."""
    rows = [list(map(Fraction, r)) for r in rows if any(r)]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = 1 / rows[rank][c]
        rows[rank] = [x * inv for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank
