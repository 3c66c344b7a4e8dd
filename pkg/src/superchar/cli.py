"""Command line front end: JSON/text output and a persistent result cache.

One executable, one pipeline. Subcommands cover the Hecke side (kl), the
canonical-basis side (cb), the character assembly (char, tilting,
truncate), and the bookkeeping helpers (reflect, tuple-weight). Exit
codes: 0 success, 1 bad input, 2 window exhausted, 3 cross-oracle
mismatch. JSON is emitted with sorted keys, so identical jobs produce
byte-identical output; the cache never changes answers, only speed.
"""

from __future__ import annotations

import json
import os
import sys
import tempfile

import click

from . import hecke
from .characters import (
    CrossOracleError,
    irreducible_character,
    tilting_character,
    truncate_character,
)
from .dynkin import TARGETS, odd_reflect, sequence_to_target, standard_window, transport_highest_weight
from .fock import CBTable, FockMonomial, FockShape, WindowError
from .laurent import format_poly
from .weight import DominantTuple, Flavor, to_weight

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_WINDOW = 2
EXIT_MISMATCH = 3

CACHE_VERSION = 1


def _warn(msg: str) -> None:
    click.echo(f"warning: {msg}", err=True)


class ResultCache:
    """Versioned JSON store keyed by canonical job strings.

    A corrupt file is rebuilt from scratch, a version mismatch is
    ignored, and an unwritable path downgrades to uncached operation;
    none of the three can change a computed answer.
    """

    def __init__(self, path: str | None):
        self.path = path
        self.entries: dict[str, object] = {}
        self._writable = path is not None
        if path is None:
            return
        try:
            with open(path, encoding="utf-8") as f:
                doc = json.load(f)
        except FileNotFoundError:
            return
        except (OSError, json.JSONDecodeError):
            _warn(f"cache file {path} is corrupt; rebuilding it")
            return
        if not isinstance(doc, dict) or doc.get("version") != CACHE_VERSION or not isinstance(doc.get("entries"), dict):
            _warn(f"cache file {path} has an unexpected schema version; ignoring it")
            return
        self.entries = doc["entries"]

    def get(self, key: str):
        return self.entries.get(key)

    def put(self, key: str, value) -> None:
        self.entries[key] = value
        if not self._writable:
            return
        directory = os.path.dirname(self.path) or "."
        try:
            os.makedirs(directory, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=directory, prefix=".superchar-cache-")
            try:
                with os.fdopen(fd, "w", encoding="utf-8") as f:
                    json.dump({"version": CACHE_VERSION, "entries": self.entries}, f, sort_keys=True)
                os.replace(tmp, self.path)
            except BaseException:
                try:
                    os.unlink(tmp)
                except OSError:
                    pass
                raise
        except OSError as exc:
            _warn(f"cache path {self.path} is not writable ({exc}); proceeding uncached")
            self._writable = False


def _cache_from(flag: str | None) -> ResultCache:
    path = flag or os.environ.get("SUPERCHAR_CACHE")
    if not path:
        root = os.environ.get("XDG_CACHE_HOME", os.path.join(os.path.expanduser("~"), ".cache"))
        path = os.path.join(root, "superchar", "cache.json")
    return ResultCache(path)


def _emit(doc: dict, fmt: str, text: str) -> None:
    if fmt == "json":
        click.echo(json.dumps(doc, sort_keys=True, ensure_ascii=False))
    else:
        click.echo(text)


def _parse_perm(text: str, n: int) -> tuple[int, ...]:
    s = text.strip()
    if "," in s:
        vals = tuple(int(x) for x in s.split(","))
    elif s.isdigit():
        vals = tuple(int(ch) for ch in s)
    else:
        raise ValueError(f"cannot read permutation {text!r}; use digits like 3412 or a comma list")
    if sorted(vals) != list(range(1, n + 1)):
        raise ValueError(f"{text!r} is not a permutation of 1..{n}")
    return vals


def _parse_ints(text: str) -> tuple[int, ...]:
    s = text.strip()
    if not s:
        return ()
    return tuple(int(x) for x in s.split(","))


def _parse_label(text: str) -> FockMonomial:
    parts = text.split("/")
    if len(parts) != 3:
        raise ValueError(f"label {text!r} must look like 'left/mid/right' (comma lists, may be empty)")
    left, mid, right = (_parse_ints(p) for p in parts)
    return FockMonomial(left, mid, right)


def _format_label(mono: FockMonomial) -> str:
    return "/".join(",".join(str(x) for x in seg) for seg in (mono.left, mono.mid, mono.right))


def _parse_window(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition(":")
    if not sep:
        raise ValueError(f"window {text!r} must look like 'lo:hi'")
    return int(lo), int(hi)


def _parse_tuple(text: str, k: int | None) -> DominantTuple:
    t = DominantTuple.parse(text)
    if k is not None and k != t.k:
        raise ValueError(f"--k {k} contradicts the tuple, which has {t.k} bar entries")
    return t


_FLAVORS = {f.value: f for f in Flavor}

_fmt_option = click.option(
    "--format", "fmt", type=click.Choice(["json", "text"]), default="json", help="Output format."
)
_cache_option = click.option(
    "--cache", default=None, help="Cache file (default: $SUPERCHAR_CACHE or the user cache directory)."
)
_engine_option = click.option(
    "--engine", type=click.Choice(["fock", "hecke", "both"]), default="fock",
    help="Block-value engine; 'both' cross-checks and fails on any mismatch.",
)
_flavor_option = click.option(
    "--flavor", type=click.Choice(sorted(_FLAVORS)), default="plain", help="Index-set flavor."
)
_tuple_option = click.option(
    "--tuple", "--weight", "tuple_text", required=True,
    help="Dominant tuple, e.g. 'a=0;l0=1,0;lm=(1);lp=(2,1);y0=1'.",
)


@click.group()
def cli() -> None:
    """Exact characters for general linear superalgebras at finite rank."""


@cli.command()
@click.option("--n", type=int, required=True, help="Symmetric group rank (letters).")
@click.option("--x", required=True, help="Lower permutation, one-line word.")
@click.option("--w", required=True, help="Upper permutation, one-line word.")
@click.option("--j", "jset", default="", help="Parabolic generators (comma list) for the antispherical module.")
@_cache_option
@_fmt_option
def kl(n: int, x: str, w: str, jset: str, cache: str | None, fmt: str) -> None:
    """Kazhdan-Lusztig polynomial P_{x,w}, or its parabolic analogue."""
    px, pw = _parse_perm(x, n), _parse_perm(w, n)
    J = _parse_ints(jset)
    store = _cache_from(cache)
    key = f"kl:n={n}:x={px}:w={pw}:J={tuple(sorted(J))}"
    poly = store.get(key)
    if poly is None:
        if J:
            poly = format_poly(hecke.parabolic_kl(J, px, pw))
        else:
            poly = format_poly(hecke.kl_polynomial(px, pw))
        store.put(key, poly)
    doc = {"command": "kl", "n": n, "x": list(px), "w": list(pw), "j": sorted(J), "polynomial": poly}
    _emit(doc, fmt, poly)


@cli.command()
@click.option("--m", type=int, required=True, help="Dual letters on the left.")
@click.option("--k", type=int, required=True, help="Natural letters in the middle.")
@click.option("--n", type=int, required=True, help="Dual letters on the right.")
@click.option("--marks", default="", help="Wedged middle adjacencies (comma list).")
@click.option("--window", "window_text", required=True, help="Letter window 'lo:hi'.")
@click.option("--lam", required=True, help="Target label 'left/mid/right'.")
@click.option("--mu", default=None, help="Single entry to report instead of the whole column.")
@click.option("--kind", type=click.Choice(["canonical", "dual"]), default="canonical")
@_cache_option
@_fmt_option
def cb(m: int, k: int, n: int, marks: str, window_text: str, lam: str, mu: str | None,
       kind: str, cache: str | None, fmt: str) -> None:
    """Canonical-basis column of a wedge label, as transition polynomials."""
    shape = FockShape(m, k, n, frozenset(_parse_ints(marks)))
    window = _parse_window(window_text)
    lam_label = _parse_label(lam)
    store = _cache_from(cache)
    key = f"cb:shape=({m},{k},{n}):marks={tuple(sorted(shape.marks))}:window={window}:lam={lam}:kind={kind}"
    entries = store.get(key)
    if entries is None:
        table = CBTable(shape, window)
        column = table.canonical(lam_label) if kind == "canonical" else table.dual_canonical(lam_label)
        entries = {_format_label(lab): format_poly(c) for lab, c in column.items()}
        store.put(key, entries)
    if mu is not None:
        wanted = _format_label(_parse_label(mu))
        poly = entries.get(wanted, "0")
        doc = {"command": "cb", "kind": kind, "lam": lam, "mu": wanted, "polynomial": poly}
        _emit(doc, fmt, poly)
        return
    doc = {"command": "cb", "kind": kind, "lam": lam, "entries": entries}
    text = "\n".join(f"{lab}: {poly}" for lab, poly in sorted(entries.items()))
    _emit(doc, fmt, text)


def _ranks(m: int | None, n: int | None) -> tuple[int | None, int | None]:
    return (m, n)


@cli.command()
@_tuple_option
@click.option("--k", type=int, default=None, help="Expected bar count (validated against the tuple).")
@_flavor_option
@click.option("--depth", type=int, default=4, show_default=True, help="Height horizon.")
@click.option("--m", type=int, default=None, help="Negative-side rank (omit for the full window).")
@click.option("--n", type=int, default=None, help="Positive-side rank (omit for the full window).")
@_engine_option
@_cache_option
@_fmt_option
def char(tuple_text: str, k: int | None, flavor: str, depth: int, m: int | None, n: int | None,
         engine: str, cache: str | None, fmt: str) -> None:
    """Irreducible character as weight multiplicities below the highest weight."""
    t = _parse_tuple(tuple_text, k)
    store = _cache_from(cache)
    key = f"char:t={t.format()}:flavor={flavor}:ranks=({m},{n}):depth={depth}:engine={engine}"
    payload = store.get(key)
    if payload is None:
        ch = irreducible_character(t, _FLAVORS[flavor], _ranks(m, n), depth, engine)
        payload = {"character": ch.to_json_obj(), "rendered": ch.render()}
        store.put(key, payload)
    doc = {"command": "char", "tuple": t.format(), "flavor": flavor, "engine": engine,
           "character": payload["character"]}
    _emit(doc, fmt, payload["rendered"])


@cli.command()
@_tuple_option
@click.option("--k", type=int, default=None, help="Expected bar count (validated against the tuple).")
@_flavor_option
@click.option("--depth", type=int, default=4, show_default=True, help="Height horizon.")
@click.option("--m", type=int, default=None, help="Negative-side rank (omit for the full window).")
@click.option("--n", type=int, default=None, help="Positive-side rank (omit for the full window).")
@_engine_option
@_cache_option
@_fmt_option
def tilting(tuple_text: str, k: int | None, flavor: str, depth: int, m: int | None, n: int | None,
            engine: str, cache: str | None, fmt: str) -> None:
    """Tilting character with its Verma flag, bottom entry first."""
    t = _parse_tuple(tuple_text, k)
    store = _cache_from(cache)
    key = f"tilting:t={t.format()}:flavor={flavor}:ranks=({m},{n}):depth={depth}:engine={engine}"
    payload = store.get(key)
    if payload is None:
        ch, flag = tilting_character(t, _FLAVORS[flavor], _ranks(m, n), depth, engine)
        payload = {
            "character": ch.to_json_obj(),
            "flag": flag.to_json_obj(),
            "rendered": flag.render() + "\n\n" + ch.render(),
        }
        store.put(key, payload)
    doc = {"command": "tilting", "tuple": t.format(), "flavor": flavor, "engine": engine,
           "character": payload["character"], "flag": payload["flag"]}
    _emit(doc, fmt, payload["rendered"])


@cli.command()
@_tuple_option
@click.option("--k", type=int, default=None, help="Expected bar count (validated against the tuple).")
@_flavor_option
@click.option("--depth", type=int, default=4, show_default=True, help="Height horizon.")
@click.option("--m", type=int, default=None, help="Negative-side rank to keep.")
@click.option("--n", type=int, default=None, help="Positive-side rank to keep.")
@_engine_option
@_cache_option
@_fmt_option
def truncate(tuple_text: str, k: int | None, flavor: str, depth: int, m: int | None, n: int | None,
             engine: str, cache: str | None, fmt: str) -> None:
    """Irreducible character on the full window, restricted to finite ranks."""
    if m is None and n is None:
        raise ValueError("truncate needs --m or --n; otherwise use char")
    t = _parse_tuple(tuple_text, k)
    store = _cache_from(cache)
    key = f"truncate:t={t.format()}:flavor={flavor}:ranks=({m},{n}):depth={depth}:engine={engine}"
    payload = store.get(key)
    if payload is None:
        full = irreducible_character(t, _FLAVORS[flavor], (None, None), depth, engine)
        ch = truncate_character(full, _ranks(m, n))
        payload = {"character": ch.to_json_obj(), "rendered": ch.render()}
        store.put(key, payload)
    doc = {"command": "truncate", "tuple": t.format(), "flavor": flavor, "ranks": [m, n],
           "character": payload["character"]}
    _emit(doc, fmt, payload["rendered"])


@cli.command()
@_tuple_option
@click.option("--k", type=int, default=None, help="Expected bar count (validated against the tuple).")
@_flavor_option
@_fmt_option
def tuple_weight(tuple_text: str, k: int | None, flavor: str, fmt: str) -> None:
    """The epsilon-coefficient dictionary weight of a dominant tuple."""
    t = _parse_tuple(tuple_text, k)
    w = to_weight(t, _FLAVORS[flavor])
    doc = {"command": "tuple-weight", "tuple": t.format(), "flavor": flavor, "weight": w.to_json_obj()}
    _emit(doc, fmt, str(w))


@cli.command()
@click.option("--sequence", "seq_text", required=True,
              help="Reflection sequence 'target:n' with target in c, s (alias bs), dc, ds.")
@_tuple_option
@click.option("--k", type=int, default=None, help="Expected bar count (validated against the tuple).")
@_fmt_option
def reflect(seq_text: str, tuple_text: str, k: int | None, fmt: str) -> None:
    """Fold one odd-reflection sequence, tracing the ordering and weight."""
    name, sep, rank_text = seq_text.partition(":")
    name = {"bs": "s"}.get(name.strip(), name.strip())
    if not sep or name not in TARGETS:
        raise ValueError(f"sequence {seq_text!r} must look like 'target:n' with target in {('bs',) + TARGETS}")
    n = int(rank_text)
    t = _parse_tuple(tuple_text, k)
    # validates that n covers the tuple and pins the expected endpoint
    expect_b, expect_w = transport_highest_weight(t, n, name)
    b = standard_window(t.k, -2 * n - 2, 2 * n + 2)
    w = to_weight(t, Flavor.TILDE)
    steps = [{"root": None, "ordering": b.render(), "weight": w.to_json_obj()}]
    for alpha in sequence_to_target(name, n):
        b, w = odd_reflect(b, w, alpha)
        steps.append({"root": str(alpha), "ordering": b.render(), "weight": w.to_json_obj()})
    assert b.order == expect_b.order and w == expect_w
    doc = {"command": "reflect", "sequence": seq_text, "tuple": t.format(), "steps": steps,
           "final": {"ordering": b.render(), "weight": w.to_json_obj()}}
    lines = [f"start   {steps[0]['ordering']}"]
    lines += [f"{s['root']}:  {s['ordering']}" for s in steps[1:]]
    lines.append(f"final weight: {w}")
    _emit(doc, fmt, "\n".join(lines))


def run(argv: list[str] | None = None) -> int:
    """Dispatch one invocation and map failures onto the exit-code contract."""
    try:
        cli.main(args=argv, standalone_mode=False)
        return EXIT_OK
    except WindowError as exc:
        click.echo(f"window exhausted: {exc}", err=True)
        return EXIT_WINDOW
    except CrossOracleError as exc:
        click.echo(f"cross-oracle mismatch: {exc}", err=True)
        return EXIT_MISMATCH
    except click.ClickException as exc:
        exc.show()
        return EXIT_USAGE
    except click.exceptions.Abort:
        return EXIT_USAGE
    except (ValueError, KeyError) as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
