# harness/grid_runner.py
import itertools
import json
import time
from dataclasses import dataclass, field

import config
from harness.event_logger import EventLogger
from harness.identity_verifier import IDENTITY_ALIASES, IDENTITY_IDS, IdentityVerifier, identity_parameters
from partitions.partition import as_composition, as_partition
from utils.errors import TooLargeError, UsageError
from utils.logger import logger
from youngbooks.staircase_poset import build_poset

# checks whose cost is driven by Young-book enumeration over the staircase poset
_ENUMERATION_BACKED = ("qko", "maj-integral", "book-count", "stanley")
# checks whose r / s are compositions (one entry per page)
_COMPOSITION_BACKED = ("qko", "maj-integral", "schur-form", "ppar", "stanley", "book-count")
_LAYOUT_KEYS = ("identities", "compositions", "K", "guard_n")


def _expand_shared_layout(payload):
    """
    {"identities": [...], "n": [...], "compositions": {"r": [...], "s": [...]}, "K": 20}
    -> identity id -> {parameter: list}. Each identity takes the shared lists its check accepts;
    multi-page checks read r / s from "compositions" when it is given.
    """
    compositions = payload.get("compositions") or {}
    if not isinstance(compositions, dict):
        raise UsageError("Grid 'compositions' must map 'r' / 's' to lists of compositions")
    shared = {name: values for name, values in payload.items() if name not in _LAYOUT_KEYS}
    identities = {}
    for identity_id in payload["identities"]:
        if not isinstance(identity_id, str):
            raise UsageError(f"Grid identities must be id strings, got {identity_id!r}")
        try:
            accepted = identity_parameters(identity_id)
        except UsageError as e:
            raise UsageError(f"Unknown identity ids in grid: {[identity_id]}") from e
        ranges = {}
        for name in accepted:
            if identity_id in _COMPOSITION_BACKED and name in compositions:
                ranges[name] = compositions[name]
            elif name in shared:
                ranges[name] = shared[name]
        identities[identity_id] = ranges
    return identities


def _shape_fits(params):
    """False for points that cannot form a shape: r / s of different lengths, or too long for N / l."""
    if "r" in params and "s" in params and not isinstance(params["r"], int):
        if len(as_composition(params["r"])) != len(as_composition(params["s"])):
            return False
    if "N" in params:
        if params.get("n", 0) + params.get("m", 0) > params["N"]:
            return False
        if "lam" in params and as_partition(params["lam"]).length > params["N"]:
            return False
    if "l" in params and "mu" in params and as_partition(params["mu"]).length > params["l"]:
        return False
    return True


@dataclass
class GridSpec:
    """
    Parameter grid: identity id -> {parameter: list of values}; the cartesian product
    of the lists is run. A per-identity "K" list overrides the grid-wide K.

    JSON forms:
        {"K": 20, "guard_n": 25, "identities": {"eval1": {"n": [1, 2], "r": [0, 1]}}}
        {"K": 20, "identities": ["qko", "eval1"], "n": [1, 2], "r": [0, 1],
         "compositions": {"r": ["1,0"], "s": ["0,1"]}}
    """

    identities: dict
    K: int = None
    guard_n: int = None
    name: str = "grid"
    skipped: list = field(default_factory=list)

    def __post_init__(self):
        self.K = config.DEFAULT_K if self.K is None else int(self.K)
        self.guard_n = config.ENUM_GUARD if self.guard_n is None else int(self.guard_n)
        unknown = [i for i in self.identities if i not in IDENTITY_IDS and i not in IDENTITY_ALIASES]
        if unknown:
            raise UsageError(f"Unknown identity ids in grid: {unknown}")
        for identity_id, ranges in self.identities.items():
            if not isinstance(ranges, dict) or any(not isinstance(v, list) for v in ranges.values()):
                raise UsageError(f"Grid entry for {identity_id} must map parameter names to lists")

    @classmethod
    def from_json(cls, source):
        """
        Args:
            source (str | dict): Path of a JSON file, or the parsed payload.
        Returns:
            GridSpec: The grid.
        """
        if isinstance(source, dict):
            payload, name = source, "grid"
        else:
            try:
                with open(source) as f:
                    payload = json.load(f)
            except (OSError, json.JSONDecodeError) as e:
                raise UsageError(f"Cannot read grid spec {source}: {e}") from e
            name = str(source)
        if "identities" not in payload:
            raise UsageError("Grid spec needs an 'identities' object")
        identities = payload["identities"]
        if isinstance(identities, list):
            identities = _expand_shared_layout(payload)
        return cls(identities, payload.get("K"), payload.get("guard_n"), name)

    def _within_guard(self, identity_id, params):
        if identity_id not in _ENUMERATION_BACKED or not {"n", "r", "s"} <= set(params):
            return True
        size = build_poset(params["n"], params["r"], params["s"]).size
        return size <= self.guard_n

    def points(self):
        """
        Expands the grid in deterministic order (identity id, then parameters).
        Points whose shape does not fit are dropped; points above the enumeration guard are skipped.
        Returns:
            list: (identity_id, params) pairs.
        """
        self.skipped = []
        expanded = []
        for identity_id in sorted(self.identities):
            ranges = dict(self.identities[identity_id])
            if "K" not in ranges and "K" in identity_parameters(identity_id):
                ranges["K"] = [self.K]
            names = sorted(ranges)
            for values in itertools.product(*(ranges[name] for name in names)):
                params = dict(zip(names, values))
                if not _shape_fits(params):
                    continue
                if not self._within_guard(identity_id, params):
                    self.skipped.append((identity_id, params))
                    continue
                expanded.append((identity_id, params))
        expanded.sort(key=lambda point: (point[0], json.dumps(point[1], sort_keys=True)))
        if self.skipped:
            logger.warning(f"{self.name}: {len(self.skipped)} points skipped by the guard N <= {self.guard_n}")
        return expanded


class GridRunner:
    def __init__(self, verifier=None, event_logger=None):
        self.verifier = verifier or IdentityVerifier()
        self.event_logger = event_logger
        logger.info("GridRunner initialized.")

    def run_grid(self, spec):
        """
        Verifies every point of a grid, one after another.
        Args:
            spec (GridSpec): The grid.
        Returns:
            dict: Summary with the sorted reports, failures and errors.
        """
        logger.info(f"Starting grid run: {spec.name}")
        start_time = time.time()
        self.verifier.guard_n = spec.guard_n
        reports, errors = [], []
        for identity_id, params in spec.points():
            try:
                report = self.verifier.verify(identity_id, **params)
            except (ValueError, ArithmeticError) as e:
                if isinstance(e, TooLargeError):
                    logger.warning(f"{identity_id} {params}: {e}")
                else:
                    logger.error(f"{identity_id} {params}: {type(e).__name__}: {e}")
                error = f"{type(e).__name__}: {e}"
                errors.append({'identity': identity_id, 'params': params, 'error': error})
                if self.event_logger is not None:
                    self.event_logger.log_error(identity_id, params, error)
                continue
            reports.append(report)
            if self.event_logger is not None:
                self.event_logger.log_report(report)

        duration = time.time() - start_time
        failed = [r for r in reports if not r.passed]
        summary = {
            'status': 'completed' if not errors else 'completed_with_errors',
            'grid': spec.name,
            'reports': reports,
            'total': len(reports),
            'passed': len(reports) - len(failed),
            'failed': len(failed),
            'errors': errors,
            'skipped': len(spec.skipped),
            'duration_seconds': duration,
        }
        logger.info(
            f"Grid {spec.name} completed in {duration:.2f} seconds: "
            f"{summary['passed']}/{summary['total']} passed, {len(errors)} errors"
        )
        return summary


if __name__ == '__main__':
    runner = GridRunner(event_logger=EventLogger())
    grid = GridSpec({"eval1": {"n": [1, 2], "r": [0, 1]}}, K=10)
    result = runner.run_grid(grid)
    print(f"{result['passed']}/{result['total']} passed")
