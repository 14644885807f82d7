import cProfile
import io
import pstats

from python_schubert.flagcoh import billey
from python_schubert.flagk import psi
from python_schubert.rootdata import builtin_cartan
from python_schubert.structconst import product_in_basis, struct_const
from python_schubert.weyl import from_word

# (family, rank, u word, v word, w word)
STRUCTURE_CONSTANTS = (
    ('A', 5, (5, 2), (4, 5, 3, 4), (4, 5, 2, 3, 4)),
    ('G', 2, (2, 1, 2), (1, 2, 1), (1, 2, 1, 2)),
    ('A', 6, (1, 3, 5, 6), (2, 5, 6), (1, 2, 3, 4, 5, 6)),
)

# (family, rank, u word, v word, dominating word)
PRODUCTS = (
    ('B', 2, (1, 2), (2, 1), None),
    ('A', 3, (3, 2, 1), (3, 2), (3, 2, 1, 3, 2, 3)),
)


def run():
    # type: () -> None
    a4 = builtin_cartan('A', 4)
    billey(a4, from_word(a4, (3, 2)), (2, 3, 2, 1, 2))
    psi(a4, from_word(a4, (3, 2)), (2, 3, 2, 1, 2))

    for family, rank, u_word, v_word, w_word in STRUCTURE_CONSTANTS:
        cm = builtin_cartan(family, rank)
        struct_const(cm, from_word(cm, u_word), from_word(cm, v_word), w_word)

    for family, rank, u_word, v_word, w0_word in PRODUCTS:
        cm = builtin_cartan(family, rank)
        product_in_basis(cm, from_word(cm, u_word), from_word(cm, v_word), w0_word)


if __name__ == '__main__':
    profiler = cProfile.Profile()
    profiler.enable()
    run()
    profiler.disable()
    file_obj = io.StringIO()
    stats = pstats.Stats(profiler, stream=file_obj).sort_stats('cumulative')
    stats.print_stats()
    print(file_obj.getvalue())
