"""
One function per subcommand. Each returns (record, exit code); records are
ordered dicts of stable keys rendered by ui.report.
"""

import math
import time

import consts
import loop_generator
from braids.garside import normal_form, words_equal
from braids.word import exponent_sum, parse_braid
from invariants.conformal import (
    Annulus,
    annulus_module,
    conformal_module_of_class,
    lemma1_obstruction,
    module_of_power,
)
from invariants.homrep import FreeHomB3, theorem3_check
from invariants.thurston3 import entropy_bound, minimal_entropy, thurston_report
from invariants.values import ModuleValue, as_module_value, module_from_entropy
from monodromy.criteria import (
    is_irreducible_class,
    lemma2_solvability,
    lemma2_threshold,
    monodromy_verdicts,
    zjuzin_reducibility,
    zjuzin_threshold,
)
from monodromy.extraction import extract_braid
from monodromy.tracking import track_roots
from ui.report import print_progress
from utils.errors import DomainError
from utils.io import load_loop, save_track


def _verdict_exit(verdict: str) -> int:
    if verdict in (consts.INCONCLUSIVE, consts.NOT_EXCLUDED):
        return consts.EXIT_INCONCLUSIVE
    return consts.EXIT_DEFINITIVE


def module_argument(value: float) -> ModuleValue:
    if math.isnan(value) or value <= 0:
        raise DomainError(f"an annulus module must be positive, got {value}")
    return as_module_value(value)


def classify(word: str, strands: int):
    w = parse_braid(word, strands)
    if strands == 3:
        report = thurston_report(w)
        return {
            "braid": w,
            "type": report.thurston_type,
            "entropy": report.entropy,
            "module": report.module,
            "exact": True,
        }, consts.EXIT_DEFINITIVE

    h = entropy_bound(w)
    record = {
        "braid": w,
        "entropy_lower_bound": h,
        "module_upper_bound": module_from_entropy(h),
        "exact": False,
    }
    if strands > consts.PENNER_MIN_STRANDS:
        record["minimal_entropy"] = minimal_entropy(strands)
    return record, consts.EXIT_DEFINITIVE


def monodromy(loopfile, emit_track=None, module=None, threads=consts.DEFAULT_THREADS, verbose=False):
    loop = load_loop(loopfile)
    print_progress(f"Loaded loop of degree {loop.n} with {loop.sample_count} samples from {loopfile}", verbose)

    start = time.time()
    track = track_roots(loop, threads)
    print_progress(f"Tracked {track.point_count} grid points in {time.time() - start:.6f} seconds "
                   f"({sum(track.refinements)} bisections, closure error {track.closure_error:.3e})", verbose)
    result = extract_braid(track)
    print_progress(f"Braid read with projection angle {result.projection_angle}", verbose)

    record = {
        "braid": result.braid,
        "length": len(result.braid),
        "permutation": str(result.permutation),
        "cycle_type": result.permutation.cycle_type(),
        "index": result.discriminant_index,
        "ncycle": is_irreducible_class(result),
    }
    if emit_track:
        record["track_file"] = save_track(track, emit_track)
    if module is not None:
        record["annulus_module"] = module_argument(module)
        record.update(monodromy_verdicts(result, module_argument(module)))
    return record, consts.EXIT_DEFINITIVE


def zjuzin(degree: int, module: float, index: int):
    verdict = zjuzin_reducibility(degree, module_argument(module), index)
    return {
        "verdict": verdict,
        "degree": degree,
        "module": module_argument(module),
        "index": index,
        "threshold": zjuzin_threshold(degree),
    }, _verdict_exit(verdict)


def solvable(module: float):
    verdict = lemma2_solvability(module_argument(module))
    return {
        "verdict": verdict,
        "module": module_argument(module),
        "threshold": lemma2_threshold(),
        "label": consts.LEMMA2_LABEL,
    }, _verdict_exit(verdict)


def obstruct(module: float, word: str, strands: int = 3):
    w = parse_braid(word, strands)
    verdict = lemma1_obstruction(module_argument(module), w)
    return {
        "verdict": verdict,
        "braid": w,
        "module": module_argument(module),
        "class_module": conformal_module_of_class(w),
    }, _verdict_exit(verdict)


def torus_check(word_a: str, word_b: str):
    verdict = theorem3_check(FreeHomB3(parse_braid(word_a, 3), parse_braid(word_b, 3)))
    record = {"verdict": verdict.kind}
    if verdict.k_a is not None:
        record["k_a"] = verdict.k_a
    if verdict.k_b is not None:
        record["k_b"] = verdict.k_b
    if verdict.failing_generator is not None:
        record["failing_generator"] = verdict.failing_generator
    record["label"] = consts.THEOREM3_LABEL
    return record, consts.EXIT_DEFINITIVE


def equal(word1: str, word2: str, strands: int = 3):
    w1, w2 = parse_braid(word1, strands), parse_braid(word2, strands)
    return {"equal": words_equal(w1, w2)}, consts.EXIT_DEFINITIVE


def normalform(word: str, strands: int = 3):
    w = parse_braid(word, strands)
    nf = normal_form(w)
    return {
        "normal_form": str(nf),
        "word": nf.to_word(),
        "infimum": nf.infimum,
        "supremum": nf.supremum,
        "canonical_length": nf.canonical_length,
        "exponent_sum": exponent_sum(w),
    }, consts.EXIT_DEFINITIVE


def powmod(module: float, power: int):
    return {"module": module_of_power(module_argument(module), power), "power": power}, consts.EXIT_DEFINITIVE


def annulus(inner: float, outer: float):
    return {"module": annulus_module(Annulus(inner, outer))}, consts.EXIT_DEFINITIVE


def generate(kind: str, degree: int, samples=consts.DEFAULT_LOOP_SAMPLES, output=None,
             loop_dir=consts.DEFAULT_LOOP_DIR, radius=1.0, radii=None, windings=None, seed=None):
    family_args = {"radius": radius, "radii": radii, "windings": windings, "seed": seed}
    result = loop_generator.generate_and_save_loop(kind, degree, samples, path=output, loop_dir=loop_dir, **family_args)
    return {
        "loop_file": result['saved_file'],
        "degree": result['loop'].n,
        "samples": result['loop'].sample_count,
        "expected_index": result['expected_index'],
    }, consts.EXIT_DEFINITIVE

