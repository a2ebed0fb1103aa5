"""Batch runs over a range of indices, with a per-index on-disk cache.

Each index produces one :class:`RunRecord`.  Records are cached as one JSON
file per index whose name carries the fixture digest and a fingerprint of
the settings that influence the result, and are written atomically.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
import os
import tempfile
import time
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Optional

from . import intpoly as ip
from .cyclo import certify_irreducible, unity_root_indices
from .exceptions import CertificateFailure, ClosedFormMismatch, IdentityFailure, NotDivisible
from .family import DEFAULT_WIDTH, build_P, family_record, fixture_digest
from .fpoly import DEFAULT_SEED, factor_mod_p, gcd_claims
from .ntheory import is_prime
from .obstruction import (CLAIM_FAILURE, NO_CERTIFICATE, Verdict,
                          check_certificate, default_prime_bound, find_certificate, index_primes)

CACHE_ENV = "CYCLOCERT_CACHE_DIR"

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_CLAIM_FAILURE = 2
EXIT_NO_CERTIFICATE = 3


@dataclass(frozen=True)
class RunConfig:
    j_min: int = 0
    j_max: int = 100
    prime_bound: Optional[int] = None
    seed: int = DEFAULT_SEED
    width: Fraction = DEFAULT_WIDTH
    threads: int = 1
    cache_dir: Optional[str] = None
    format: str = "json"
    oracle_primes: Optional[int] = 20

    def __post_init__(self):
        if self.j_min < 0 or self.j_min > self.j_max:
            raise ValueError(f"bad index range [{self.j_min}, {self.j_max}]")
        if self.format not in ("json", "csv", "text"):
            raise ValueError(f"unknown format {self.format!r}")
        object.__setattr__(self, "width", Fraction(self.width))

    def fingerprint(self) -> str:
        """Hash of the settings that change a record's content."""
        key = f"{self.prime_bound}|{self.seed}|{self.width}|{self.oracle_primes}"
        return hashlib.sha256(key.encode()).hexdigest()[:12]


def _frac_json(x: Fraction) -> dict:
    return {"num": str(x.numerator), "den": str(x.denominator)}


def _frac_from(d: dict) -> Fraction:
    return Fraction(int(d["num"]), int(d["den"]))


@dataclass
class RunRecord:
    """Everything computed for one index, in JSON-ready form."""

    j: int
    digest: str
    verdict: str
    certificate: Optional[dict]
    m: list
    cyclotomic: list
    special_values: dict
    identities: dict
    gcd_claims: Optional[dict]
    multiplicities: dict
    irreducible: dict
    pf_bracket: Optional[dict]
    detail: str = ""
    ms: int = field(default=0, compare=False)

    @property
    def cert_prime(self) -> Optional[int]:
        return None if self.certificate is None else self.certificate["p"]

    @property
    def bracket(self) -> Optional[ip.RationalInterval]:
        if self.pf_bracket is None:
            return None
        return ip.RationalInterval(_frac_from(self.pf_bracket["lo"]), _frac_from(self.pf_bracket["hi"]))

    def to_json(self, timing: bool = True) -> dict:
        out = asdict(self)
        if not timing:
            out.pop("ms")
        return out

    @classmethod
    def from_json(cls, d: dict) -> "RunRecord":
        return cls(**d)


def _multiplicity_check(j: int, seed: int) -> dict:
    """Largest multiplicity of ``m_j`` mod each prime dividing ``2j+3``, and the multiplicity of ``x``."""
    from .family import minimal_polys

    m, _ = minimal_polys(j)
    out = {}
    for p in index_primes(j):
        fm = factor_mod_p(m, p, seed=seed)
        out[str(p)] = {"max": max(e for _, e in fm.factors), "x": fm.multiplicity((0, 1))}
    return out


def process_index(j: int, config: RunConfig) -> RunRecord:
    """Run every check for one index and collect the results."""
    t0 = time.perf_counter()
    bound = config.prime_bound if config.prime_bound is not None else default_prime_bound(j)
    detail = ""
    fam = irr = None
    try:
        fam = family_record(j, config.width)
        irr = certify_irreducible(j, oracle_primes=config.oracle_primes)
    except (IdentityFailure, ClosedFormMismatch, NotDivisible, CertificateFailure) as exc:
        v = Verdict(CLAIM_FAILURE, j, detail=str(exc))
    else:
        v = find_certificate(j, bound, seed=config.seed)
        if v.certificate is not None and not check_certificate(v.certificate, seed=config.seed + 1):
            v = Verdict(CLAIM_FAILURE, j, detail=f"certificate at p={v.certificate.p} did not reproduce")

    claims = None
    if is_prime(2 * j + 3):
        claims = gcd_claims(j)
        claims = {"p": claims["p"], "claim1": claims["claim1"], "claim2": claims["claim2"]}
        if j >= 1 and not (claims["claim1"] and claims["claim2"]) and v.kind != CLAIM_FAILURE:
            v = Verdict(CLAIM_FAILURE, j, detail=f"gcd claim failed mod {claims['p']}")
    mults = _multiplicity_check(j, config.seed)
    for p, info in mults.items():
        if v.kind == CLAIM_FAILURE:
            break
        if info["x"] != 1:
            v = Verdict(CLAIM_FAILURE, j, detail=f"x divides m_j mod {p} {info['x']} times")
        elif int(p) > 3 and j >= 2 and info["max"] > 4:
            v = Verdict(CLAIM_FAILURE, j, detail=f"multiplicity {info['max']} > 4 mod {p}")
    detail = v.detail

    if fam is not None:
        checks = fam.checks
        m = [str(c) for c in fam.m]
        bracket = {"lo": _frac_json(fam.d_bracket.lo), "hi": _frac_json(fam.d_bracket.hi)}
    else:
        from .family import check_identities, check_special_values

        try:
            checks = {**check_identities(j), **check_special_values(j)}
        except Exception as exc:  # the identity suite itself could not run
            checks = {"error": False}
            detail = detail or str(exc)
        m, bracket = [], None
    cyclo = irr.cyclo if irr is not None else unity_root_indices(build_P(j))
    special_names = ("p(0)", "p'(0)", "P(0)", "P(1)", "P''(-1)")
    irreducible = {"proof_grade": bool(irr and irr.proof_grade)}
    if irr is not None and irr.oracle is not None:
        irreducible.update(oracle_primes=len(irr.oracle.primes), oracle_irreducible=irr.oracle.irreducible)
    return RunRecord(
        j=j,
        digest=fixture_digest(j),
        verdict=v.kind,
        certificate=None if v.certificate is None else v.certificate.to_json(),
        m=m,
        cyclotomic=[[n, e] for n, e in cyclo.entries],
        special_values={k: checks[k] for k in special_names if k in checks},
        identities={k: ok for k, ok in checks.items() if k not in special_names},
        gcd_claims=claims,
        multiplicities=mults,
        irreducible=irreducible,
        pf_bracket=bracket,
        detail=detail,
        ms=int((time.perf_counter() - t0) * 1000),
    )


# --- cache -----------------------------------------------------------------


def cache_path(cache_dir, j: int, digest: str, config: RunConfig) -> Path:
    return Path(cache_dir) / f"j{j:05d}-{digest[:16]}-{config.fingerprint()}.json"


def load_cached(cache_dir, j: int, config: RunConfig) -> Optional[RunRecord]:
    """Cached record for ``j`` if its digest matches freshly built fixtures."""
    digest = fixture_digest(j)
    path = cache_path(cache_dir, j, digest, config)
    if not path.exists():
        return None
    rec = RunRecord.from_json(json.loads(path.read_text()))
    return rec if rec.digest == digest and rec.j == j else None


def store_cached(cache_dir, rec: RunRecord, config: RunConfig) -> Path:
    path = cache_path(cache_dir, rec.j, rec.digest, config)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-", suffix=".json")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(rec.to_json(), fh, sort_keys=True)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return path


def run_pipeline(config: RunConfig) -> list[RunRecord]:
    """One record per index in ``[j_min, j_max]``, ascending; cached indices are reused."""
    cache_dir = config.cache_dir or os.environ.get(CACHE_ENV)
    records: dict[int, RunRecord] = {}
    todo = []
    for j in range(config.j_min, config.j_max + 1):
        rec = load_cached(cache_dir, j, config) if cache_dir else None
        if rec is not None:
            records[j] = rec
        else:
            todo.append(j)

    def keep(rec):
        records[rec.j] = rec
        if cache_dir:
            store_cached(cache_dir, rec, config)

    if config.threads > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=config.threads) as pool:
            futures = [pool.submit(process_index, j, config) for j in todo]
            for fut in as_completed(futures):
                keep(fut.result())
    else:
        for j in todo:
            keep(process_index(j, config))
    return [records[j] for j in sorted(records)]


def exit_code(records) -> int:
    if any(r.verdict == CLAIM_FAILURE for r in records):
        return EXIT_CLAIM_FAILURE
    if any(r.j >= 2 and r.verdict == NO_CERTIFICATE for r in records):
        return EXIT_NO_CERTIFICATE
    return EXIT_OK


# --- reports -----------------------------------------------------------------

CSV_COLUMNS = ("j", "two_j_plus_three", "cert_prime", "pattern", "verdict", "ms")


def _pattern_str(rec: RunRecord) -> str:
    if rec.certificate is None:
        return ""
    return "{" + ",".join(f"({d},{m})" for d, m in rec.certificate["pattern"]) + "}"


def render_report(records, fmt: str) -> str:
    """Serialized report; JSON output omits timings so identical runs match byte for byte."""
    records = sorted(records, key=lambda r: r.j)
    if not records:
        raise ValueError("no records to report")
    if fmt == "json":
        return json.dumps([r.to_json(timing=False) for r in records], indent=1, sort_keys=True) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in records:
            w.writerow([r.j, 2 * r.j + 3, r.cert_prime if r.cert_prime is not None else "",
                        _pattern_str(r), r.verdict, r.ms])
        return buf.getvalue()
    if fmt == "text":
        lines = []
        for r in records:
            b = r.bracket
            br = "n/a" if b is None else f"[{float(b.lo):.9f}, {float(b.hi):.9f}]"
            cert = "" if r.certificate is None else f" p={r.cert_prime} pattern={_pattern_str(r)}"
            lines.append(f"j={r.j:<4d} d_j in {br}  {r.verdict}{cert}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def emit_report(records, fmt: str, path=None) -> str:
    """Render and, when ``path`` is given, write the report atomically."""
    text = render_report(records, fmt)
    if path is not None:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-")
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    return text
