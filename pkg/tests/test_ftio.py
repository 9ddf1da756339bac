import numpy as np
import pytest

from ftpie.distributions import Exponential, FixedProb, Weibull
from ftpie.errors import (
    BadArityError,
    CycleError,
    DuplicateIdError,
    NandMissingTildeError,
    NandTildeOutsideNandError,
    ParseError,
    UnknownReferenceError,
)
from ftpie.ftio import parse_ft, print_ft
from ftpie.generate import random_tree
from ftpie.model import Nand, Or
from ftpie.solar import solar_ft_text

OR2 = "event A exp rate=0.001\nevent B prob p=0.5\ngate T or A B\ntoplevel T"


def test_parse_or2():
    tree = parse_ft(OR2)
    assert tree.events == {"A": Exponential(0.001), "B": FixedProb(0.5)}
    assert tree.gates == {"T": Or(("A", "B"))}
    assert tree.top == "T"


def test_parse_all_features():
    text = """
    # comment line
    event A weibull shape=1.5 scale=2000   # trailing comment
    event B prob p=0.25
    event C exp rate=1e-3
    gate N nand ~A ~ B C
    gate X xor A B
    gate Y not C
    gate Z nor X Y N
    toplevel Z
    """
    tree = parse_ft(text)
    assert tree.events["A"] == Weibull(1.5, 2000.0)
    assert tree.gates["N"] == Nand(("A", "B"), ("C",))
    assert not tree.is_coherent


@pytest.mark.parametrize("text,exc,line", [
    ("gate T and A", BadArityError, 1),
    ("event A prob p=0.5\n\ngate T xor A\ntoplevel T", BadArityError, 3),
    ("event A prob p=0.5\ngate T or ~A A\ntoplevel T", NandTildeOutsideNandError, 2),
    ("event A prob p=0.5\nevent B prob p=0.5\ngate T nand A B\ntoplevel T", NandMissingTildeError, 3),
    ("event A prob p=0.5\nevent B prob p=0.5\ngate T nand ~A ~B\ntoplevel T", NandMissingTildeError, 3),
    ("event A prob p=1.5", ParseError, 1),
    ("event A exp rate=abc", ParseError, 1),
    ("event A exp rate=inf", ParseError, 1),
    ("event A exp", ParseError, 1),
    ("event A gamma k=1", ParseError, 1),
    ("event 1A prob p=0.1", ParseError, 1),
    ("frobnicate", ParseError, 1),
    ("event A prob p=0.5\ngate T foo A A\ntoplevel T", ParseError, 2),
    ("event A prob p=0.5\nevent A prob p=0.1\ntoplevel A", DuplicateIdError, 2),
    ("event A prob p=0.5\ngate T or A Q\ntoplevel T", UnknownReferenceError, 2),
    ("event A prob p=0.5\ngate G or H A\ngate H or G A\ntoplevel G", CycleError, None),
    ("event A prob p=0.5\ntoplevel A\ntoplevel A", ParseError, 3),
    ("event A prob p=0.5", ParseError, None),
])
def test_errors(text, exc, line):
    with pytest.raises(exc) as info:
        parse_ft(text)
    if line is not None:
        assert info.value.line == line
        assert str(info.value).startswith(f"line {line}")


def test_error_column():
    with pytest.raises(ParseError) as info:
        parse_ft("event A exp rate=x")
    assert (info.value.line, info.value.column) == (1, 18)


@pytest.mark.parametrize("text", [
    OR2,
    "event A prob p=0.5\nevent B prob p=0.5\ngate TOP and A B\ntoplevel TOP",
    solar_ft_text(),
])
def test_roundtrip_examples(text):
    tree = parse_ft(text)
    printed = print_ft(tree)
    assert parse_ft(printed) == tree
    assert print_ft(parse_ft(printed)) == printed


@pytest.mark.parametrize("seed", range(30))
def test_roundtrip_random(seed):
    rng = np.random.default_rng(seed)
    tree = random_tree(rng, n_events=int(rng.integers(1, 12)), max_depth=4, coherent=bool(seed % 3))
    once = parse_ft(print_ft(tree))
    assert once == tree
    assert parse_ft(print_ft(once)) == once


def test_print_is_canonical():
    text = "event b prob p=0.1\nevent a exp rate=0.5\ngate T or b G\ngate G and a b\ntoplevel T\n"
    assert print_ft(parse_ft(text)) == (
        "event a exp rate=0.5\nevent b prob p=0.1\ngate G and a b\ngate T or b G\ntoplevel T\n"
    )
