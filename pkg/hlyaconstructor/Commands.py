# -*- coding: utf-8 -*-
from __future__ import print_function
from __future__ import absolute_import
"""
Drivers of the hlya_tool.py command line.

Every cmd_* returns (certificate, exit_code). The exit codes are

    0  success
    1  mathematical failure (axiom, ideal, witness rejected)
    2  malformed input
    3  construction obstruction (no invariant complement, singular twist)
    4  inconclusive search
"""

import argparse
import functools
import inspect
import json
import sys

import hlyaconstructor.Fields as Fields
import hlyaconstructor.Settings as Settings
from hlyaconstructor.Settings import ParallelPrint as print
import hlyaconstructor.Algebra as Algebra
import hlyaconstructor.Axioms as Axioms
import hlyaconstructor.Subobjects as Subobjects
import hlyaconstructor.Constructions as Constructions
import hlyaconstructor.Isoclinism as Isoclinism
import hlyaconstructor.Fixtures as Fixtures
from hlyaconstructor.Algebra import HlyAlgebra, MalformedAlgebra
from hlyaconstructor.Methods import DocumentError
from hlyaconstructor.Certificate import Certificate


__all__ = ["EXIT_OK", "EXIT_FAILURE", "EXIT_MALFORMED", "EXIT_OBSTRUCTION", "EXIT_INCONCLUSIVE",
           "load_input", "parse_ideal", "cmd_check", "cmd_quotient", "cmd_direct_sum",
           "cmd_factor_set", "cmd_isoclinic", "cmd_decompose", "cmd_corpus", "build_parser", "main"]

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_MALFORMED = 2
EXIT_OBSTRUCTION = 3
EXIT_INCONCLUSIVE = 4

VERDICTS = {EXIT_OK: "pass", EXIT_FAILURE: "fail", EXIT_MALFORMED: "malformed",
            EXIT_OBSTRUCTION: "obstruction", EXIT_INCONCLUSIVE: "inconclusive"}

# First match wins
ERROR_CODES = [
    (DocumentError, EXIT_MALFORMED),
    (MalformedAlgebra, EXIT_MALFORMED),
    (IOError, EXIT_MALFORMED),
    (Constructions.NoInvariantComplement, EXIT_OBSTRUCTION),
    (Constructions.TwistNotInvertibleOnQuotient, EXIT_OBSTRUCTION),
    (Constructions.TwistNotInvertible, EXIT_OBSTRUCTION),
    (Isoclinism.BudgetExhausted, EXIT_INCONCLUSIVE),
    (ValueError, EXIT_FAILURE),
    (RuntimeError, EXIT_FAILURE),
]

FIXTURE_PREFIX = "fixture:"


def _exit_code(err):
    for kind, code in ERROR_CODES:
        if isinstance(err, kind):
            return code
    raise err


def _error_dict(err):
    out = {"type": type(err).__name__, "message": str(err)}
    if isinstance(err, Constructions.NoInvariantComplement):
        out["step"] = err.step
        out["system_shape"] = list(err.system_shape) if err.system_shape is not None else None
        out["sylvester_system"] = err.system_to_dict()
    if isinstance(err, Isoclinism.BudgetExhausted):
        out["examined"] = err.examined
    return out


def _plain(value):
    if value is None or isinstance(value, (bool, int, str)):
        return value
    return str(value)


def certified(name):
    """
    Wrap a command body f(cert, ...) -> exit code into cmd(...) -> (certificate, exit code).
    Library errors are turned into an exit code and an "error" entry of the results.
    """
    def decorator(function):
        signature = inspect.signature(function)

        @functools.wraps(function)
        def wrapper(*args, **kwargs):
            bound = signature.bind(None, *args, **kwargs)
            bound.apply_defaults()
            arguments = {key: _plain(value) for key, value in bound.arguments.items()
                         if key not in ("cert", "verbose")}
            cert = Certificate(name, arguments, timed=bool(bound.arguments.get("verbose")))
            try:
                code = function(cert, *args, **kwargs)
            except tuple(kind for kind, _ in ERROR_CODES) as err:
                code = _exit_code(err)
                cert.set_result("error", _error_dict(err))
            return cert.finish(VERDICTS[code], code), code
        return wrapper
    return decorator


# ---- inputs ----
def load_input(reference, field="Q", dim=None):
    """
    Read an algebra from a path or a "fixture:NAME" reference.

    Results
    -------
        algebra : HlyAlgebra
        document : dict
            The parsed document, hashed into the certificate.
    """
    if reference.startswith(FIXTURE_PREFIX):
        algebra = Fixtures.get_fixture(reference[len(FIXTURE_PREFIX):], field, dim)
        return algebra, algebra.to_dict()
    with open(reference, "r") as fp:
        document = Algebra.loads(fp.read())
    return HlyAlgebra.from_dict(document), document


def _reference(path, fixture):
    if fixture:
        return FIXTURE_PREFIX + fixture
    if not path:
        raise DocumentError("Error, give an input path or --fixture NAME")
    return path


def parse_ideal(algebra, text):
    """center, derived, a name of the document's subspaces, or inline JSON rows."""
    if text == "center":
        return Subobjects.center(algebra)
    if text == "derived":
        return Subobjects.derived(algebra)
    if text in algebra.subspaces:
        return algebra.named_subspace(text)
    try:
        rows = json.loads(text)
    except ValueError:
        raise DocumentError("Error, the ideal '{}' is neither center, derived, a named subspace nor JSON rows".format(text))
    return Algebra.subspace_from_rows(rows, algebra.field, algebra.dim, "ideal")


def _subspace(S):
    return {"dim": S.dim, "basis": S.to_json()}


def _emit(algebra, path):
    if path:
        algebra.save_json(path)


# ---- commands ----
@certified("check")
def cmd_check(cert, reference, field="Q", dim=None, verbose=False):
    """Axiom report, center, derived subalgebra and stem flag."""
    A, document = load_input(reference, field, dim)
    cert.add_input(reference, document)
    report = Axioms.check_axioms(A, timer=cert.timer)
    cert.set_result("axioms", report.to_dict())
    cert.set_result("center", _subspace(Subobjects.center(A)))
    cert.set_result("derived", _subspace(Subobjects.derived(A)))
    cert.set_result("stem", Subobjects.is_stem(A))
    cert.set_result("abelian", A.is_abelian())
    if A.metadata:
        cert.set_result("metadata", A.metadata)
    return EXIT_OK if report.passed else EXIT_FAILURE


@certified("quotient")
def cmd_quotient(cert, reference, ideal="center", field="Q", dim=None, emit=None):
    A, document = load_input(reference, field, dim)
    cert.add_input(reference, document)
    I = parse_ideal(A, ideal)
    cert.set_result("ideal", _subspace(I))
    try:
        pres = Constructions.quotient(A, I)
    except Constructions.NotAnIdeal as err:
        cert.set_result("ideal_report", err.report.to_dict())
        cert.set_result("error", _error_dict(err))
        return EXIT_FAILURE
    cert.set_result("presentation", pres.to_dict())
    _emit(pres.quotient, emit)
    return EXIT_OK


@certified("direct-sum")
def cmd_direct_sum(cert, reference_a, reference_b, field="Q", dim=None, emit=None):
    A, doc_a = load_input(reference_a, field, dim)
    B, doc_b = load_input(reference_b, field, dim)
    cert.add_input(reference_a, doc_a)
    cert.add_input(reference_b, doc_b)
    S = Constructions.direct_sum(A, B)
    cert.set_result("direct_sum", S.to_dict())
    _emit(S, emit)
    return EXIT_OK


def _load_factor_set(path, field):
    with open(path, "r") as fp:
        document = Algebra.loads(fp.read())
    if not isinstance(document, dict):
        raise DocumentError("Error, the factor set document must be a JSON object")
    body = document.get("factor_set", document)
    fs = Constructions.FactorSet.from_dict(body, field)
    z_twist = document.get("z_twist")
    if z_twist is None:
        z_twist = field.eye(fs.z)
    else:
        if not isinstance(z_twist, list) or len(z_twist) != fs.z or \
                any(not isinstance(r, list) or len(r) != fs.z for r in z_twist):
            raise DocumentError("Error, field 'z_twist' must be a {0}x{0} list of rows".format(fs.z))
        z_twist = field.asarray([[field.scalar_from_json(v) for v in r] for r in z_twist], shape=(fs.z, fs.z))
    return fs, z_twist, document


@certified("factor-set")
def cmd_factor_set(cert, reference, mode="roundtrip", factor_set=None, field="Q", dim=None, emit=None):
    """
    extract   : the factor set of the algebra
    extend    : the algebra is the base quotient, the central extension of factor_set is built
    roundtrip : extract, extend and reconstruct the isomorphism onto the algebra
    """
    A, document = load_input(reference, field, dim)
    cert.add_input(reference, document)

    if mode == "extract":
        fs, sect = Constructions.extract_factor_set(A)
        cert.set_result("factor_set", fs.to_dict())
        cert.set_result("lift", A.field.array_to_json(sect.lift.T))
        cert.set_result("quotient", sect.presentation.quotient.to_dict())
        return EXIT_OK

    if mode == "extend":
        if not factor_set:
            raise DocumentError("Error, --extend needs a factor set document")
        fs, z_twist, fs_document = _load_factor_set(factor_set, A.field)
        cert.add_input(factor_set, fs_document)
        if fs.q != A.dim:
            raise DocumentError("Error, the factor set is indexed by dimension {} but the base algebra has dimension {}".format(
                fs.q, A.dim))
        report = Constructions.validate_factor_set(fs, z_twist, A)
        cert.set_result("validation", report.to_dict())
        if report.extension is not None:
            omega = report.extension
            cert.set_result("extension", omega.to_dict())
            cert.set_result("extension_center", _subspace(omega.computed_center))
            cert.set_result("extension_center_agrees", omega.center_agrees)
            _emit(omega, emit)
        return EXIT_OK if report.passed else EXIT_FAILURE

    if mode == "roundtrip":
        result = Constructions.factor_set_roundtrip(A)
        cert.set_result("roundtrip", result.to_dict())
        _emit(result.omega, emit)
        return EXIT_OK if result.verified else EXIT_FAILURE

    raise ValueError("Error, unknown factor set mode '{}'".format(mode))


@certified("isoclinic")
def cmd_isoclinic(cert, reference_a, reference_b, witness=None, budget=Isoclinism.DEFAULT_BUDGET,
                  bound=Isoclinism.DEFAULT_BOUND, field="Q", dim=None, verbose=False):
    """Verify a supplied witness, or search one."""
    A, doc_a = load_input(reference_a, field, dim)
    B, doc_b = load_input(reference_b, field, dim)
    cert.add_input(reference_a, doc_a)
    cert.add_input(reference_b, doc_b)
    fa, fb = Isoclinism.isoclinism_frame(A), Isoclinism.isoclinism_frame(B)
    cert.set_result("frames", {"A": fa.to_dict(), "B": fb.to_dict()})

    if witness:
        with open(witness, "r") as fp:
            w_document = Algebra.loads(fp.read())
        cert.add_input(witness, w_document)
        try:
            w = Isoclinism.IsoclinismWitness.from_dict(w_document, A.field)
        except ValueError as err:
            raise DocumentError(str(err))
        report = Isoclinism.verify_isoclinism(A, B, w, frames=(fa, fb))
        cert.set_result("witness", w.to_dict())
        return EXIT_OK if report.passed else EXIT_FAILURE

    w = Isoclinism.search_isoclinism(A, B, budget=budget, bound=bound, verbose=verbose, timer=cert.timer)
    if w is None:
        cert.set_result("isoclinic", False)
        return EXIT_FAILURE
    cert.set_result("isoclinic", True)
    cert.set_result("witness", w.to_dict())
    return EXIT_OK


@certified("decompose")
def cmd_decompose(cert, reference, field="Q", dim=None, emit_prefix=None):
    A, document = load_input(reference, field, dim)
    cert.add_input(reference, document)
    dec = Isoclinism.decompose_stem_abelian(A)
    cert.set_result("decomposition", dec.to_dict())
    if emit_prefix:
        dec.stem_part.save_json(emit_prefix + "_stem.json")
        dec.abelian_part.save_json(emit_prefix + "_abelian.json")
    return EXIT_OK


@certified("corpus")
def cmd_corpus(cert, field="F2", dim=2, count=10, seed=0, directory="corpus", exhaustive=False, verbose=False):
    """Generate and save a corpus of algebras passing every check."""
    field = Fields.get_field(field)
    if field.p not in (2, 3):
        raise DocumentError("Error, corpora are generated over F2 or F3, got {}".format(field.name))
    if dim < 0 or dim > 4:
        raise DocumentError("Error, corpora are generated in dimension 0 to 4, got {}".format(dim))
    if exhaustive:
        corpus = Fixtures.enumerate_algebras(field, dim, verbose=verbose)
    else:
        corpus = Fixtures.generate_corpus(field, dim, count, seed=seed, verbose=verbose)
    paths = Fixtures.save_corpus(corpus, directory)
    for path, A in zip(paths, corpus):
        cert.add_input(path, A.to_dict())
    cert.set_result("count", len(corpus))
    cert.set_result("files", [Fixtures.corpus_filename(A.field, A.dim, i) for i, A in enumerate(corpus)])
    return EXIT_OK


# ---- command line ----
def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=None,
                        help="Number of workers (default: HLYA_THREADS or the machine parallelism)")
    common.add_argument("--output", default=None, help="Certificate file (default: standard output)")
    common.add_argument("--verbose", action="store_true", help="Print progress")
    common.add_argument("--field", default="Q", help="Field of the built-in fixtures: Q, F2, F3, F5, F7")
    common.add_argument("--dim", type=int, default=None, help="Dimension of the abelian fixture")

    parser = argparse.ArgumentParser(prog="hlya_tool.py",
                                     description="Exact computations on Hom-Lie Yamaguti algebras.",
                                     parents=[common])
    sub = parser.add_subparsers(dest="command")
    sub.required = True

    p = sub.add_parser("check", parents=[common], help="Check every axiom")
    p.add_argument("path", nargs="?", default=None)
    p.add_argument("--fixture", default=None)

    p = sub.add_parser("quotient", parents=[common], help="Quotient by a Hom-ideal")
    p.add_argument("path", nargs="?", default=None)
    p.add_argument("--fixture", default=None)
    p.add_argument("--ideal", default="center",
                   help="center, derived, a subspace name of the document, or JSON rows")
    p.add_argument("--emit", default=None, help="Write the quotient document here")

    p = sub.add_parser("direct-sum", parents=[common], help="Direct sum of two algebras")
    p.add_argument("path_a")
    p.add_argument("path_b")
    p.add_argument("--emit", default=None)

    p = sub.add_parser("factor-set", parents=[common], help="Factor sets and central extensions")
    p.add_argument("path", nargs="?", default=None)
    p.add_argument("--fixture", default=None)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--extract", dest="mode", action="store_const", const="extract")
    mode.add_argument("--extend", dest="factor_set", default=None, metavar="FS_PATH")
    mode.add_argument("--roundtrip", dest="mode", action="store_const", const="roundtrip")
    p.add_argument("--emit", default=None)

    p = sub.add_parser("isoclinic", parents=[common], help="Verify or search an isoclinism")
    p.add_argument("path_a")
    p.add_argument("path_b")
    p.add_argument("--witness", default=None)
    p.add_argument("--search", action="store_true", help="Search a witness (the default without --witness)")
    p.add_argument("--budget", type=int, default=Isoclinism.DEFAULT_BUDGET)
    p.add_argument("--bound", type=int, default=Isoclinism.DEFAULT_BOUND)

    p = sub.add_parser("decompose", parents=[common], help="Stem (+) abelian decomposition")
    p.add_argument("path", nargs="?", default=None)
    p.add_argument("--fixture", default=None)
    p.add_argument("--emit-prefix", default=None)

    p = sub.add_parser("corpus", parents=[common], help="Generate a corpus of algebras")
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--directory", default="corpus")
    p.add_argument("--exhaustive", action="store_true")
    return parser


def _dispatch(args):
    if args.command == "check":
        return cmd_check(_reference(args.path, args.fixture), args.field, args.dim, args.verbose)
    if args.command == "quotient":
        return cmd_quotient(_reference(args.path, args.fixture), args.ideal, args.field, args.dim, args.emit)
    if args.command == "direct-sum":
        return cmd_direct_sum(args.path_a, args.path_b, args.field, args.dim, args.emit)
    if args.command == "factor-set":
        mode = "extend" if args.factor_set else (args.mode or "roundtrip")
        return cmd_factor_set(_reference(args.path, args.fixture), mode, args.factor_set,
                              args.field, args.dim, args.emit)
    if args.command == "isoclinic":
        return cmd_isoclinic(args.path_a, args.path_b, args.witness, args.budget, args.bound,
                             args.field, args.dim, args.verbose)
    if args.command == "decompose":
        return cmd_decompose(_reference(args.path, args.fixture), args.field, args.dim, args.emit_prefix)
    if args.command == "corpus":
        field = "F2" if args.field == "Q" else args.field
        return cmd_corpus(field, 2 if args.dim is None else args.dim, args.count, args.seed,
                          args.directory, args.exhaustive, args.verbose)
    raise ValueError("Error, unknown command {}".format(args.command))


def main(argv=None):
    """
    Run the tool, write the certificate and return the exit code.
    """
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        threads = args.threads if args.threads is not None else Settings.threads_from_environment()
        Settings.SetupParallel(threads)
        Fields.get_field(args.field)
        if args.command != "corpus" and args.dim is not None and args.dim < 0:
            raise ValueError("Error, --dim must be non negative")
    except ValueError as err:
        print(err, file=sys.stderr)
        return EXIT_MALFORMED

    try:
        cert, code = _dispatch(args)
    except DocumentError as err:
        cert = Certificate(args.command)
        cert.set_result("error", _error_dict(err))
        code = EXIT_MALFORMED
        cert.finish(VERDICTS[code], code)

    if args.output:
        cert.save(args.output)
    else:
        print(cert.to_json())
    if args.verbose and cert.timer.active:
        cert.timer.print_report(is_master=True, file=sys.stderr)
    return code
