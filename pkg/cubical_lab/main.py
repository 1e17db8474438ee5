"""
Command-line front end: `python -m cubical_lab <subcommand> ...`.

Exit codes: 0 success, 1 a property was refuted, 2 input error, 3 a
capacity bound or search budget was exceeded.
"""
import argparse
import logging
import sys

from cubical_lab.config import Config
from cubical_lab.constants import (
    EXIT_INPUT_ERROR,
    EXIT_OK,
    EXIT_REFUTED,
    EXPORT_FORMATS,
    FORMAT_JSON,
    FORMAT_OFF,
    STATUS_COUNTEREXAMPLE,
    THEORIES,
    THEORY_BIPOINTED,
    THEORY_DL,
    THEORY_DM,
)
from cubical_lab.cset.corpus import CORPUS_NAMES, load_corpus
from cubical_lab.cset.cset import from_presentation, verify_functoriality
from cubical_lab.cube.bipointed import bipointed_hom_set, compare_bipointed, compare_distributive
from cubical_lab.cube.cube import hom_count, hom_set
from cubical_lab.duality.duality import (
    FinitePoset,
    duality_roundtrip,
    find_isomorphism,
    join_irreducibles,
    lower_sets,
)
from cubical_lab.flatness.flatness import check_disjunction_property, check_flatness_bounded
from cubical_lab.lattice.demorgan import enumerate_dm, normalize_dm
from cubical_lab.lattice.finite import FiniteLattice
from cubical_lab.lattice.free import enumerate_free, normalize
from cubical_lab.moore.moore import (
    MoorePath,
    concat,
    contract_path,
    enumerate_paths,
    reverse,
    verify_staircase,
)
from cubical_lab.realization.export import export_mesh
from cubical_lab.realization.realization import realize_numeric, triangulate
from cubical_lab.storage.storage import (
    dumps,
    load_lattice,
    load_path,
    load_poset,
    load_presentation,
    write_bytes,
    write_json,
)
from cubical_lab.utils.errors import CubicalLabError, InputError, UnsupportedTheoryError
from cubical_lab.utils.validation import parse_int_list, validate_non_negative_int

logger = logging.getLogger(__name__)


def _emit(args, data):
    """Print or write a JSON document, or plain text when given a string."""
    output = getattr(args, "output", None)
    if output and not isinstance(data, str):
        write_json(output, data)
        return
    text = data if isinstance(data, str) else dumps(data)
    if not text.endswith("\n"):
        text += "\n"
    if output:
        write_bytes(output, text.encode("utf-8"))
    else:
        sys.stdout.write(text)


def _cubical_set(args):
    theory = args.theory or THEORY_DL
    if theory == THEORY_BIPOINTED:
        raise UnsupportedTheoryError("Cubical sets are built over the dl or dm cube category")
    if args.presentation:
        return from_presentation(load_presentation(args.presentation, theory=args.theory, dims=args.dims))
    return load_corpus(args.corpus or "point", max_dim=2 if args.dims is None else args.dims, theory=theory)


def _functoriality(args, cset):
    report = verify_functoriality(cset, seed=args.seed)
    if not report.ok:
        logger.warning(f"Functoriality check failed on {cset.name}: {report.violations[:3]}")
    return report


def cmd_normalize(args):
    if args.theory == THEORY_DM:
        element = normalize_dm(args.term, args.n)
    else:
        element = normalize(args.term, args.n)
    _emit(args, str(element))
    return EXIT_OK


def cmd_enumerate(args):
    elements = enumerate_dm(args.n) if args.theory == THEORY_DM else enumerate_free(args.n)
    if args.count:
        _emit(args, str(len(elements)))
    else:
        _emit(args, "\n".join(str(e) for e in elements))
    return EXIT_OK


def cmd_hom(args):
    theory = args.theory or THEORY_DL
    if theory == THEORY_BIPOINTED:
        morphisms = bipointed_hom_set(args.m, args.n)
        count = len(morphisms)
    else:
        count = hom_count(args.m, args.n, theory)
        morphisms = None if args.count else hom_set(args.m, args.n, theory)
    if args.count:
        _emit(args, str(count))
    else:
        _emit(args, "\n".join(str(f) for f in morphisms))
    return EXIT_OK


def cmd_dual(args):
    if args.poset:
        poset = load_poset(args.poset)
        down = lower_sets(poset)
        back = find_isomorphism(join_irreducibles(down), poset)
        _emit(args, {"poset": poset.to_dict(), "lower_sets": down.to_dict(),
                     "irreducibles_isomorphic": back is not None})
        return EXIT_OK if back is not None else EXIT_REFUTED
    if args.free is not None:
        lattice = FiniteLattice.free(args.free)
    else:
        lattice = _lattice(args)
    witness = duality_roundtrip(lattice)
    irreducibles = join_irreducibles(lattice)
    result = {"lattice": lattice.name, "irreducibles": irreducibles.to_dict(),
              "isomorphism": witness.to_dict()}
    if args.free is not None:
        cube = FinitePoset.power_of_two(args.free)
        result["irreducibles_match_power_of_two"] = find_isomorphism(irreducibles, cube) is not None
    _emit(args, result)
    return EXIT_OK


def _lattice(args):
    if not args.lattice:
        raise InputError("--lattice FILE is required")
    return load_lattice(args.lattice)


def cmd_flat(args):
    bounds = parse_int_list(args.bounds, expected=3, field_name="Bounds")
    report = check_flatness_bounded(_lattice(args), bounds, workers=args.workers)
    _emit(args, report.to_dict())
    return EXIT_REFUTED if report.status == STATUS_COUNTEREXAMPLE else EXIT_OK


def cmd_disjunction(args):
    report = check_disjunction_property(_lattice(args))
    _emit(args, report.to_dict())
    return EXIT_REFUTED if report.status == STATUS_COUNTEREXAMPLE else EXIT_OK


def cmd_realize(args):
    cset = _cubical_set(args)
    if args.verify and not _functoriality(args, cset).ok:
        return EXIT_REFUTED
    mesh = realize_numeric(cset, samples=args.samples)
    payload = export_mesh(mesh, args.format)
    if args.output:
        write_bytes(args.output, payload)
    else:
        sys.stdout.write(payload.decode("ascii"))
    return EXIT_OK


def cmd_triangulate(args):
    cset = _cubical_set(args)
    result = {}
    if args.verify:
        report = _functoriality(args, cset)
        result["functoriality"] = report.to_dict()
        if not report.ok:
            _emit(args, result)
            return EXIT_REFUTED
    result.update(triangulate(cset).to_dict())
    result["name"] = cset.name
    _emit(args, result)
    return EXIT_OK


def _moore_path(args, cset):
    if args.path_file:
        return load_path(args.path_file, cset)
    if args.edges:
        edges = [e.strip() for e in args.edges.split(";") if e.strip()]
        return MoorePath.from_edges(cset, edges, source=args.source)
    if args.source:
        return MoorePath.identity(cset, args.source)
    return None


def cmd_moore(args):
    cset = _cubical_set(args)
    path = _moore_path(args, cset)
    if path is None:
        paths = enumerate_paths(cset, args.max_length)
        _emit(args, {"name": cset.name, "max_length": args.max_length,
                     "count": len(paths), "paths": [p.to_dict() for p in paths]})
        return EXIT_OK
    result = {"path": path.to_dict()}
    status = EXIT_OK
    if args.reverse:
        reversed_path = reverse(path)
        result["reverse"] = reversed_path.to_dict()
        result["loop"] = concat(path, reversed_path).to_dict()
    if args.contract:
        rows = contract_path(path)
        report = verify_staircase(path, rows)
        result["staircase"] = [[square.to_dict() for square in row] for row in rows]
        result["staircase_check"] = report.to_dict()
        if not report.ok:
            status = EXIT_REFUTED
    _emit(args, result)
    return status


def cmd_compare_bipointed(args):
    if args.theory == THEORY_DM:
        report = compare_distributive(args.max_dim if args.max_dim is not None else 1)
    else:
        report = compare_bipointed(args.max_dim if args.max_dim is not None else 2)
    _emit(args, report.to_dict())
    return EXIT_OK


def _add_cset_arguments(parser):
    source = parser.add_mutually_exclusive_group()
    source.add_argument("--corpus", choices=CORPUS_NAMES, help="built-in cubical set")
    source.add_argument("--presentation", help="presentation JSON file")
    parser.add_argument("--dims", type=int, default=None, help="truncation level (default 2)")
    parser.add_argument("--verify", action="store_true", help="check functoriality of the action first")


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--theory", choices=THEORIES, default=None, help="cube category variant")
    common.add_argument("--seed", type=int, default=Config.DEFAULT_SEED, help="seed for sampled checks")
    common.add_argument("--output", help="write the result to a file instead of stdout")

    parser = argparse.ArgumentParser(prog="cubical_lab", description="Free lattices, cube categories "
                                     "and cubical sets on finite data")
    subparsers = parser.add_subparsers(dest="command", required=True)

    def command(name, help_text):
        return subparsers.add_parser(name, help=help_text, parents=[common])

    p = command("normalize", "normal form of a lattice term")
    p.add_argument("-n", type=int, required=True, help="generator count")
    p.add_argument("term")
    p.set_defaults(handler=cmd_normalize)

    p = command("enumerate", "elements of DL(n) or DM(n)")
    p.add_argument("-n", type=int, required=True, help="generator count")
    p.add_argument("--count", action="store_true")
    p.set_defaults(handler=cmd_enumerate)

    p = command("hom", "morphisms m -> n of the cube category")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--count", action="store_true")
    p.set_defaults(handler=cmd_hom)

    p = command("dual", "Birkhoff duality round trip")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--lattice", help="lattice JSON file")
    group.add_argument("--poset", help="poset JSON file")
    group.add_argument("--free", type=int, help="use DL(n)")
    p.set_defaults(handler=cmd_dual)

    p = command("flat", "bounded flatness search")
    p.add_argument("--lattice", required=True, help="lattice JSON file")
    p.add_argument("--bounds", default="2,2,3", help="n,m,k (default 2,2,3)")
    p.add_argument("--workers", type=int, default=None, help="worker processes")
    p.set_defaults(handler=cmd_flat)

    p = command("disjunction", "disjunction property a v b = 1 => a = 1 or b = 1")
    p.add_argument("--lattice", required=True, help="lattice JSON file")
    p.set_defaults(handler=cmd_disjunction)

    p = command("realize", "numeric geometric realization")
    _add_cset_arguments(p)
    p.add_argument("--samples", type=int, default=3, help="grid points per axis")
    p.add_argument("--format", choices=EXPORT_FORMATS, default=FORMAT_OFF)
    p.set_defaults(handler=cmd_realize)

    p = command("triangulate", "simplicial triangulation")
    _add_cset_arguments(p)
    p.add_argument("--format", choices=[FORMAT_JSON], default=FORMAT_JSON)
    p.set_defaults(handler=cmd_triangulate)

    p = command("moore", "Moore paths: enumerate, reverse, contract")
    _add_cset_arguments(p)
    p.add_argument("--edges", help="semicolon separated edge ids")
    p.add_argument("--source", help="start vertex (needed for the empty path)")
    p.add_argument("--path-file", help="path JSON file")
    p.add_argument("--max-length", type=int, default=2, help="enumeration bound")
    p.add_argument("--reverse", action="store_true", help="reverse the path (dm theory)")
    p.add_argument("--contract", action="store_true", help="contract the path and check the staircase")
    p.set_defaults(handler=cmd_moore)

    p = command("compare-bipointed", "comparison functor into the cube category")
    p.add_argument("--max-dim", type=int, default=None)
    p.set_defaults(handler=cmd_compare_bipointed)
    return parser


def run(argv=None):
    """Parse arguments, dispatch, and map errors to exit codes."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_INPUT_ERROR
    try:
        for name in ("n", "m", "samples", "max_length", "dims", "max_dim", "workers", "free"):
            value = getattr(args, name, None)
            if value is not None:
                validate_non_negative_int(value, name.replace("_", " ").capitalize())
        return args.handler(args)
    except CubicalLabError as e:
        logger.debug("Command failed", exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code


def main():
    """Entry point of the cubical_lab command."""
    logging.basicConfig(level=Config.LOG_LEVEL)
    sys.exit(run())


if __name__ == "__main__":
    main()
