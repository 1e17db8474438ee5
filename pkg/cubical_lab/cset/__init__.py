from cubical_lab.cset.corpus import CORPUS_NAMES, corpus_presentation, cube_complex, load_corpus
from cubical_lab.cset.cset import (
    CubicalSet,
    FreeCubicalSet,
    ProductCubicalSet,
    TerminalCubicalSet,
    cocubical_eval,
    from_presentation,
    interval,
    is_degenerate,
    level_of,
    product_of,
    representable,
    terminal,
    verify_functoriality,
    yoneda_is_S_I,
)
from cubical_lab.cset.presentation import Presentation, parse_presentation
