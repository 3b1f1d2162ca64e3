from itertools import combinations

import pytest

from config import CLASSICAL_STEP_PATTERNS, MAJOR_MODE, MINOR_MODE
from errors import InvalidScaleError, InvalidToneCountError, NotAChordError
from harmony import (
    EXTENDED, STANDARD, Chord, HarmonicSystem, classify, enumerate_chords, is_classical_pattern,
    is_harmonic_subset, max_harmonic_subset_size, max_harmonic_subsets, most_musical_modes,
    musicality, musicality_landscape, rank_modes, relabel_chord, step_patterns
)
from theory import Mode, Scale, enumerate_modes, transpose, valid_roots

FIRST_SEVEN = (1, 2, 3, 4, 5, 6, 7)


def triple_loop_chords(tones, intervals):
    """Oracle indépendant: trois boucles imbriquées sur la définition"""
    found = []
    for i in range(len(tones)):
        for j in range(i + 1, len(tones)):
            for k in range(j + 1, len(tones)):
                a, b, c = tones[i], tones[j], tones[k]
                if b - a in intervals and c - b in intervals and c - a in intervals:
                    found.append((a, b, c))
    return found


def chord_tones(chords, size=None):
    return [c.tones for c in chords if size is None or c.size == size]


def test_systems():
    assert STANDARD.intervals == (3, 4, 5, 7, 8, 9)
    assert EXTENDED.intervals == (3, 4, 5, 6, 7, 8, 9)
    assert HarmonicSystem.from_flag(True) is EXTENDED
    assert HarmonicSystem((9, 3, 3, 4)).intervals == (3, 4, 9)
    with pytest.raises(InvalidScaleError):
        HarmonicSystem((3, 12))
    with pytest.raises(InvalidScaleError):
        HarmonicSystem((3.5,))
    assert HarmonicSystem((3.0, 4)).intervals == (3, 4)


@pytest.mark.parametrize('tones, system, expected', [
    ((1, 4, 8), STANDARD, True),
    ((1, 2, 3), STANDARD, False),
    ((1, 4, 7, 10), EXTENDED, True),
    ((1, 4, 7, 10), STANDARD, False),
    ((5,), STANDARD, True),
])
def test_is_harmonic_subset(tones, system, expected):
    assert is_harmonic_subset(tones, system) is expected


def test_first_seven_tones_follow_the_definitions():
    # {1,4,7} contient un intervalle de 6: accord seulement dans le système étendu
    scale = Scale(FIRST_SEVEN)
    assert enumerate_chords(scale, STANDARD) == []
    assert chord_tones(enumerate_chords(scale, EXTENDED)) == [(1, 4, 7)]


def test_minor_scale_chords():
    chords = enumerate_chords(Scale(MINOR_MODE), STANDARD)
    expected = [(1, 4, 8), (1, 4, 9), (1, 6, 9), (3, 6, 11), (3, 8, 11), (4, 8, 11)]
    assert chord_tones(chords) == expected
    assert expected == triple_loop_chords(MINOR_MODE, STANDARD.intervals)


def test_major_scale_chords():
    chords = enumerate_chords(Scale(MAJOR_MODE), STANDARD)
    assert chord_tones(chords) == [(1, 5, 8), (1, 5, 10), (1, 6, 10), (3, 6, 10), (3, 8, 12), (5, 8, 12)]


def test_chromatic_chords_match_the_oracle(chromatic_scale):
    standard = enumerate_chords(chromatic_scale, STANDARD)
    oracle = triple_loop_chords(chromatic_scale.tones, STANDARD.intervals)
    assert chord_tones(standard) == oracle
    assert len(oracle) == 28

    extended = enumerate_chords(chromatic_scale, EXTENDED)
    assert chord_tones(extended, 3) == triple_loop_chords(chromatic_scale.tones, EXTENDED.intervals)
    assert len(chord_tones(extended, 3)) == 40
    assert chord_tones(extended, 4) == [(1, 4, 7, 10), (2, 5, 8, 11), (3, 6, 9, 12)]


def test_chords_are_valid_and_complete():
    for k in (5, 7, 9):
        for mode in enumerate_modes(k):
            for system in (STANDARD, EXTENDED):
                chords = enumerate_chords(mode.canonical, system)
                for chord in chords:
                    assert is_harmonic_subset(chord.tones, system)
                    assert chord.tones[-1] - chord.tones[0] in system.intervals
                assert chord_tones(chords, 3) == triple_loop_chords(mode.tones, system.intervals)


@pytest.mark.parametrize('tones, expected', [((1, 4, 8), (3, 4)), ((1, 5, 9), (4, 4)), ((1, 5, 10), (4, 5))])
def test_classify(tones, expected):
    assert classify(Chord(tones)) == expected


def test_classify_rejects_non_chords():
    with pytest.raises(NotAChordError):
        classify(Chord((1, 2, 3)))
    with pytest.raises(NotAChordError):
        classify(Chord((1, 4, 7)))
    assert classify(Chord((1, 4, 7)), EXTENDED) == (3, 3)
    assert classify(Chord((1, 4, 7, 10)), EXTENDED) == (3, 3, 3)


@pytest.mark.parametrize('tones, system, expected', [
    (MINOR_MODE, STANDARD, 6),
    (MAJOR_MODE, STANDARD, 6),
    (FIRST_SEVEN, STANDARD, 0),
    (FIRST_SEVEN, EXTENDED, 1),
    ((1,), STANDARD, 0),
    ((1,), EXTENDED, 0),
])
def test_musicality(tones, system, expected):
    assert musicality(Mode(Scale(tones)), system) == expected


def test_musicality_counts_three_tone_chords_only(chromatic_scale):
    mode = Mode(chromatic_scale)
    assert musicality(mode, EXTENDED) == 40
    assert len(enumerate_chords(chromatic_scale, EXTENDED)) == 43


def test_max_harmonic_subset_size():
    assert max_harmonic_subset_size(STANDARD) == 3
    assert max_harmonic_subset_size(EXTENDED) == 4
    assert max_harmonic_subset_size(HarmonicSystem(())) == 1
    assert STANDARD.max_chord_size == 3


def test_extended_witnesses():
    witnesses = max_harmonic_subsets(EXTENDED)
    assert (1, 4, 7, 10) in witnesses
    assert witnesses == [(1, 4, 7, 10), (2, 5, 8, 11), (3, 6, 9, 12)]


def test_no_harmonic_four_subset_in_standard_system():
    four_subsets = list(combinations(range(1, 13), 4))
    assert len(four_subsets) == 495
    assert not any(is_harmonic_subset(s, STANDARD) for s in four_subsets)


def test_pattern_completeness(chromatic_scale):
    harmonic = set(STANDARD.intervals)
    expected = {(a, b) for a in harmonic for b in harmonic if a + b in harmonic}
    realised = {classify(c) for c in enumerate_chords(chromatic_scale, STANDARD)}

    assert realised == expected
    assert set(step_patterns(STANDARD)) == expected
    # Les cinq types classiques, plus (4,5) et (5,4)
    assert set(CLASSICAL_STEP_PATTERNS) < realised
    assert realised - set(CLASSICAL_STEP_PATTERNS) == {(4, 5), (5, 4)}
    assert not is_classical_pattern((4, 5))


def test_extended_step_patterns():
    assert step_patterns(EXTENDED, 4) == ((3, 3, 3),)
    assert (3, 3) in step_patterns(EXTENDED)
    assert (3, 6) in step_patterns(EXTENDED)


@pytest.mark.parametrize('system', [STANDARD, EXTENDED])
def test_transposition_invariance(system):
    violations = 0
    for k in range(1, 13):
        for mode in enumerate_modes(k):
            chords = enumerate_chords(mode.canonical, system)
            for root in valid_roots(mode):
                scale = transpose(mode, root)
                moved = enumerate_chords(scale, system)
                mapped = sorted(relabel_chord(c, mode.canonical, scale) for c in chords)
                if len(moved) != len(chords) or mapped != moved:
                    violations += 1
    assert violations == 0


def test_relabel_chord():
    minor = Mode(Scale(MINOR_MODE))
    target = Scale((2, 4, 5, 7, 9, 10, 12))
    assert relabel_chord(Chord((1, 4, 8)), minor.canonical, target).tones == (2, 5, 9)
    with pytest.raises(NotAChordError):
        relabel_chord(Chord((2, 5, 9)), minor.canonical, target)


def test_rank_modes_extremes():
    single = rank_modes(1)
    assert len(single) == 1 and single[0].musicality == 0

    chromatic = rank_modes(12)
    assert len(chromatic) == 1
    assert chromatic[0].musicality == len(triple_loop_chords(tuple(range(1, 13)), STANDARD.intervals))


def test_rank_modes_seven_tones():
    reports = rank_modes(7)
    assert len(reports) == 462

    by_tones = {r.mode.tones: r for r in reports}
    assert by_tones[MAJOR_MODE].musicality == 6
    assert by_tones[MINOR_MODE].musicality == 6
    assert reports[0].musicality >= 6

    keys = [(-r.musicality, r.mode.tones) for r in reports]
    assert keys == sorted(keys)
    assert all(r.musicality == len(r.chords) for r in reports)
    assert [r.mode for r in rank_modes(7)] == [r.mode for r in reports]


def test_rank_modes_invalid_k():
    with pytest.raises(InvalidToneCountError):
        rank_modes(13)


def test_most_musical_modes():
    best = most_musical_modes(7)
    top = rank_modes(7)[0].musicality
    assert best and all(r.musicality == top for r in best)


def test_musicality_landscape():
    landscape = musicality_landscape()
    assert sorted(landscape) == list(range(1, 13))
    assert landscape[1] == (0, 1)
    assert landscape[2] == (0, 11)
    assert landscape[12] == (28, 1)
