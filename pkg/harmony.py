"""
Module d'harmonie
Intervalles harmoniques, sous-ensembles harmoniques, accords, musicalité
et classement exhaustif des modes
"""

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product

from config import CLASSICAL_STEP_PATTERNS, EXTENDED_INTERVALS, OCTAVE_SIZE, STANDARD_INTERVALS
from errors import InvalidScaleError, NotAChordError
from logger import logger
from theory import check_tone_count, enumerate_modes, exact_integers, format_tones, interval


# ============================================================
# TYPES
# ============================================================

@dataclass(frozen=True)
class HarmonicSystem:
    """
    Ensemble des tailles d'intervalles considérées comme harmoniques
    """
    intervals: tuple
    name: str = 'custom'

    def __post_init__(self):
        intervals = tuple(sorted(set(exact_integers(self.intervals, 'Intervalles harmoniques'))))
        if any(not 1 <= i <= OCTAVE_SIZE - 1 for i in intervals):
            raise InvalidScaleError(f"Intervalles harmoniques hors de 1..11: {intervals}")
        object.__setattr__(self, 'intervals', intervals)

    @classmethod
    def from_flag(cls, extended=False):
        return EXTENDED if extended else STANDARD

    def is_harmonic(self, semitones):
        return semitones in self.intervals

    @property
    def max_chord_size(self):
        return max_harmonic_subset_size(self)

    def __str__(self):
        return f"{self.name} {format_tones(self.intervals)}"


STANDARD = HarmonicSystem(STANDARD_INTERVALS, 'standard')
EXTENDED = HarmonicSystem(EXTENDED_INTERVALS, 'extended')


@dataclass(frozen=True, order=True)
class Chord:
    """Sous-ensemble harmonique de 3 tons (4 dans le système étendu)"""
    tones: tuple

    @property
    def size(self):
        return len(self.tones)

    @property
    def pattern(self):
        return tuple(b - a for a, b in zip(self.tones, self.tones[1:]))

    def __str__(self):
        return '{' + format_tones(self.tones) + '}'


@dataclass(frozen=True)
class MusicalityReport:
    mode: object
    musicality: int
    chords: tuple = field(default=())


# ============================================================
# SOUS-ENSEMBLES HARMONIQUES
# ============================================================

def is_harmonic_subset(tones, system):
    """
    Vrai si chaque paire de tons est séparée par un intervalle harmonique

    Les singletons (et l'ensemble vide) sont harmoniques par vacuité.
    """
    return all(
        interval(a, b) in system.intervals
        for a, b in combinations(tones, 2)
    )


def enumerate_chords(scale, system):
    """
    Tous les accords d'une gamme, triés lexicographiquement

    Args:
        scale: Gamme
        system: HarmonicSystem

    Returns:
        list: Chord de 3 tons, puis de 4 tons si le système en admet
    """
    chords = []
    for size in range(3, min(system.max_chord_size, len(scale.tones)) + 1):
        chords.extend(
            Chord(subset)
            for subset in combinations(scale.tones, size)
            if is_harmonic_subset(subset, system)
        )
    return sorted(chords)


def triads(scale, system):
    """Accords à 3 tons uniquement (ceux que compte la musicalité)"""
    return [c for c in enumerate_chords(scale, system) if c.size == 3]


def classify(chord, system=STANDARD):
    """
    Motif de pas consécutifs d'un accord: (n2-n1, n3-n2[, n4-n3])

    Raises:
        NotAChordError: un intervalle n'est pas harmonique dans le système
    """
    tones = tuple(sorted(chord.tones))
    if len(tones) < 3 or not is_harmonic_subset(tones, system):
        raise NotAChordError(f"{{{format_tones(tones)}}} n'est pas un accord du système {system.name}")
    return Chord(tones).pattern


def is_classical_pattern(pattern):
    return tuple(pattern) in CLASSICAL_STEP_PATTERNS


def step_patterns(system, size=3):
    """
    Motifs de pas dont chaque pas et chaque somme partielle est harmonique

    Args:
        system: HarmonicSystem
        size: Nombre de tons de l'accord (3 ou 4)

    Returns:
        tuple: Motifs triés
    """
    patterns = []
    for steps in product(system.intervals, repeat=size - 1):
        tones = [0]
        for step in steps:
            tones.append(tones[-1] + step)
        if is_harmonic_subset(tones, system):
            patterns.append(steps)
    return tuple(sorted(patterns))


def relabel_chord(chord, source, target):
    """
    Transporte un accord d'une gamme vers une gamme équivalente, indice par indice

    f({n_i1, n_i2, n_i3}) = {m_i1, m_i2, m_i3}
    """
    index = {tone: i for i, tone in enumerate(source.tones)}
    try:
        return Chord(tuple(target.tones[index[t]] for t in chord.tones))
    except KeyError as e:
        raise NotAChordError(f"Le ton {e.args[0]} de {chord} n'appartient pas à {source}") from e


# ============================================================
# TAILLE MAXIMALE (recherche exhaustive sur les 4096 sous-ensembles)
# ============================================================

def _all_subsets():
    tones = range(1, OCTAVE_SIZE + 1)
    for size in range(0, OCTAVE_SIZE + 1):
        yield from combinations(tones, size)


@lru_cache(maxsize=None)
def max_harmonic_subset_size(system):
    """Taille maximale d'un sous-ensemble harmonique de {1..12}"""
    return max(len(s) for s in _all_subsets() if is_harmonic_subset(s, system))


@lru_cache(maxsize=None)
def max_harmonic_subsets(system):
    """Tous les sous-ensembles harmoniques de taille maximale (témoins)"""
    size = max_harmonic_subset_size(system)
    return [s for s in combinations(range(1, OCTAVE_SIZE + 1), size) if is_harmonic_subset(s, system)]


# ============================================================
# MUSICALITÉ ET CLASSEMENT
# ============================================================

def musicality(mode, system=STANDARD):
    """Nombre d'accords à 3 tons de la gamme canonique du mode"""
    return len(triads(mode.canonical, system))


def musicality_report(mode, system=STANDARD):
    chords = tuple(triads(mode.canonical, system))
    return MusicalityReport(mode=mode, musicality=len(chords), chords=chords)


def rank_modes(k, system=STANDARD):
    """
    Classe tous les modes à k tons par musicalité décroissante

    Les égalités sont départagées par ordre lexicographique des tons.

    Raises:
        InvalidToneCountError: k hors de 1..12
    """
    check_tone_count(k)

    reports = [musicality_report(mode, system) for mode in enumerate_modes(k)]
    reports.sort(key=lambda r: (-r.musicality, r.mode.tones))

    logger.info(
        f"{len(reports)} modes à {k} tons classés ({system.name}), "
        f"musicalité max = {reports[0].musicality}"
    )
    return reports


def most_musical_modes(k, system=STANDARD):
    """Modes à k tons qui atteignent la musicalité maximale"""
    reports = rank_modes(k, system)
    best = reports[0].musicality
    return [r for r in reports if r.musicality == best]


def musicality_landscape(system=STANDARD):
    """
    Musicalité maximale et nombre de modes qui l'atteignent, pour chaque k

    Returns:
        dict: k -> (musicalité max, nombre de modes au max)
    """
    landscape = {}
    for k in range(1, OCTAVE_SIZE + 1):
        best = most_musical_modes(k, system)
        landscape[k] = (best[0].musicality, len(best))
    return landscape
