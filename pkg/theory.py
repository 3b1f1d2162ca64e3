"""
Module d'arithmétique des classes de hauteur
Tons, intervalles, gammes, modes, équivalence et dénombrement des modes
"""

import re
from dataclasses import dataclass
from itertools import combinations

from scipy.special import comb

from config import OCTAVE_SIZE, TONE_NAMES
from errors import InvalidScaleError, InvalidToneCountError, OutOfRangeError
from logger import logger

# Alias de types: un ton vit dans 1..12, une hauteur est non bornée
Tone = int
Pitch = int
Interval = int

NAME_TO_TONE = {name: tone for tone, name in TONE_NAMES.items()}


# ============================================================
# TYPES
# ============================================================

@dataclass(frozen=True, order=True)
class Scale:
    """
    Gamme à k tons: suite strictement croissante d'entiers de 1 à 12
    """
    tones: tuple

    def __post_init__(self):
        tones = exact_integers(self.tones, 'Tons')
        object.__setattr__(self, 'tones', tones)

        if not 1 <= len(tones) <= OCTAVE_SIZE:
            raise InvalidScaleError(f"Une gamme contient 1 à 12 tons, reçu {len(tones)}")
        if any(not is_tone(t) for t in tones):
            raise InvalidScaleError(f"Tons hors de 1..12: {tones}")
        if any(a >= b for a, b in zip(tones, tones[1:])):
            raise InvalidScaleError(f"Les tons doivent être strictement croissants: {tones}")

    @property
    def k(self):
        return len(self.tones)

    def __iter__(self):
        return iter(self.tones)

    def __len__(self):
        return len(self.tones)

    def __str__(self):
        return format_tones(self.tones)


@dataclass(frozen=True, order=True)
class Mode:
    """
    Mode à k tons, représenté par la gamme équivalente qui commence sur 1
    """
    canonical: Scale

    def __post_init__(self):
        if self.canonical.tones[0] != 1:
            raise InvalidScaleError(
                f"Un mode canonique commence sur 1: {self.canonical.tones}"
            )

    @classmethod
    def of(cls, *tones):
        """Construit un mode à partir de tons déjà canoniques"""
        return cls(Scale(tones))

    @property
    def tones(self):
        return self.canonical.tones

    @property
    def k(self):
        return self.canonical.k

    def __str__(self):
        return str(self.canonical)


# ============================================================
# TONS ET INTERVALLES
# ============================================================

def is_tone(value):
    return isinstance(value, int) and 1 <= value <= OCTAVE_SIZE


def exact_integers(values, what):
    """
    Convertit des valeurs en entiers, sans troncature

    Raises:
        InvalidScaleError: valeur non entière (2.7, '3', None)
    """
    result = []
    for value in values:
        try:
            number = int(value)
        except (TypeError, ValueError, OverflowError):
            number = None
        if number is None or isinstance(value, (bool, str)) or number != value:
            raise InvalidScaleError(f"{what}: valeur non entière {value!r}")
        result.append(number)
    return tuple(result)


def interval(a, b):
    """
    Intervalle entre deux tons ou hauteurs: valeur absolue de la différence

    Args:
        a: Hauteur
        b: Hauteur

    Returns:
        int: Nombre de demi-tons
    """
    return abs(a - b)


def pitch_class(p):
    """
    Classe de hauteur (1..12) d'une hauteur quelconque, négatives comprises

    Args:
        p: Hauteur entière non bornée

    Returns:
        int: Ton t dans 1..12 avec t ≡ p (mod 12)
    """
    # % en Python renvoie toujours un reste positif
    return (p - 1) % OCTAVE_SIZE + 1


def tone_name(tone):
    """Nom anglais d'un ton (1 -> 'A')"""
    return TONE_NAMES[pitch_class(tone)]


def tone_from_name(name):
    """
    Ton associé à un nom ('C#' -> 5), insensible à la casse

    Raises:
        InvalidScaleError: nom inconnu
    """
    key = name.strip().upper()
    if key not in NAME_TO_TONE:
        raise InvalidScaleError(f"Nom de ton inconnu: '{name}' (attendu: A, A#, ..., G#)")
    return NAME_TO_TONE[key]


def parse_tone(text):
    """Accepte un numéro de ton ('4') ou un nom ('C')"""
    text = text.strip()
    if text.lstrip('-').isdigit():
        value = int(text)
        if not is_tone(value):
            raise InvalidScaleError(f"Ton hors de 1..12: {value}")
        return value
    return tone_from_name(text)


def format_tones(tones):
    return ','.join(str(t) for t in tones)


def format_names(tones):
    return ','.join(tone_name(t) for t in tones)


def split_scale_text(text):
    """Découpe une spécification de gamme (virgules ou espaces)"""
    return [part for part in re.split(r'[,\s]+', text.strip()) if part]


def parse_scale(text):
    """
    Parse une gamme donnée en numéros ("1,3,5,6") ou en noms ("A,B,C#,D")

    Args:
        text: Spécification séparée par des virgules ou des espaces

    Returns:
        Scale: Gamme triée

    Raises:
        InvalidScaleError: ton inconnu, hors plage ou répété
    """
    parts = split_scale_text(text)
    if not parts:
        raise InvalidScaleError("Spécification de gamme vide")

    values = [parse_tone(part) for part in parts]
    if len(set(values)) != len(values):
        raise InvalidScaleError(f"Tons répétés dans '{text}'")

    return Scale(tuple(sorted(values)))


# ============================================================
# ÉQUIVALENCE, CANONISATION, TRANSPOSITION
# ============================================================

def canonicalize(scale):
    """
    Ramène une gamme au représentant de son mode (premier ton = 1)

    Args:
        scale: Gamme quelconque

    Returns:
        Mode: Mode dont la gamme canonique est décalée de tones[0] - 1
    """
    offset = scale.tones[0] - 1
    return Mode(Scale(tuple(t - offset for t in scale.tones)))


def is_equivalent(s1, s2):
    """
    Deux gammes de même longueur sont équivalentes si m_i - n_i est constant
    """
    if len(s1.tones) != len(s2.tones):
        return False
    shifts = {m - n for n, m in zip(s1.tones, s2.tones)}
    return len(shifts) == 1


def transpose(mode, root):
    """
    Réalise un mode à partir d'un ton de départ, sans repli d'octave

    Args:
        mode: Mode canonique
        root: Ton de départ (1..12)

    Returns:
        Scale: Gamme (tones[i] + root - 1)

    Raises:
        OutOfRangeError: le ton le plus haut dépasserait 12
    """
    if not is_tone(root):
        raise OutOfRangeError(f"Ton de départ hors de 1..12: {root}")

    tones = tuple(t + root - 1 for t in mode.tones)
    if tones[-1] > OCTAVE_SIZE:
        raise OutOfRangeError(
            f"Le mode {mode} depuis {tone_name(root)} atteint {tones[-1]} > {OCTAVE_SIZE}"
        )
    return Scale(tones)


def valid_roots(mode):
    """Tons de départ pour lesquels transpose() reste dans 1..12"""
    return list(range(1, OCTAVE_SIZE - mode.tones[-1] + 2))


def rooted_pitch_classes(mode, root):
    """
    Classes de hauteur d'un mode posé sur un ton, avec repli d'octave

    Returns:
        frozenset: { pitch_class(t + root - 1) }
    """
    return frozenset(pitch_class(t + root - 1) for t in mode.tones)


# ============================================================
# DÉNOMBREMENT DES MODES
# ============================================================

def check_tone_count(k):
    if isinstance(k, bool) or not isinstance(k, int) or not 1 <= k <= OCTAVE_SIZE:
        raise InvalidToneCountError(k)


def enumerate_modes(k):
    """
    Liste tous les modes à k tons, dans l'ordre lexicographique

    Chaque mode commence sur 1 et choisit k-1 tons parmi 2..12.

    Raises:
        InvalidToneCountError: k hors de 1..12
    """
    check_tone_count(k)

    modes = [
        Mode(Scale((1,) + rest))
        for rest in combinations(range(2, OCTAVE_SIZE + 1), k - 1)
    ]
    logger.debug(f"{len(modes)} modes à {k} tons énumérés")
    return modes


def count_modes(k):
    """Nombre de modes à k tons: C(11, k-1)"""
    check_tone_count(k)
    return int(comb(OCTAVE_SIZE - 1, k - 1, exact=True))


def count_all_modes():
    """Nombre total de modes, tous k confondus (2048)"""
    return sum(count_modes(k) for k in range(1, OCTAVE_SIZE + 1))


def count_scales():
    """Chaque mode peut partir de chacun des 12 tons (24 576 gammes)"""
    return count_all_modes() * OCTAVE_SIZE
