"""
Module de composition
Transforme une suite d'entiers en duo (mélodie + harmonie) dans un mode donné
"""

import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from config import (
    DEFAULT_ROOT, DEFAULT_TERM_COUNT, MAJOR_MODE, MAX_PALETTE_SIZE, RHYTHM_VALUES,
    TICKS_PER_QUARTER
)
from errors import InvalidConfigError, SequenceError
from harmony import STANDARD
from logger import logger
from theory import Mode, Scale, pitch_class, rooted_pitch_classes
from validation import validate_composer_config

SEQUENCE_KINDS = ('primes', 'file', 'list')


# ============================================================
# SOURCES DE SÉQUENCES
# ============================================================

def primes(n):
    """
    Les n premiers nombres premiers (crible d'Ératosthène)

    Args:
        n: Nombre de termes (>= 0)

    Returns:
        list: Nombres premiers dans l'ordre
    """
    if n <= 0:
        return []

    # Majoration du n-ième premier: n (ln n + ln ln n) pour n >= 6
    limit = 15 if n < 6 else int(n * (math.log(n) + math.log(math.log(n)))) + 1

    sieve = np.ones(limit + 1, dtype=bool)
    sieve[:2] = False
    for i in range(2, math.isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i::i] = False

    return [int(p) for p in np.flatnonzero(sieve)[:n]]


def read_sequence_file(path):
    """
    Lit des entiers positifs séparés par des espaces (UTF-8)

    Raises:
        SequenceError: fichier non UTF-8, terme non entier ou non positif
        OSError: fichier illisible
    """
    try:
        text = Path(path).read_text(encoding='utf-8')
    except UnicodeDecodeError as e:
        raise SequenceError(f"{path}: fichier non UTF-8 (octet {e.start})") from e
    terms = []
    for position, token in enumerate(text.split(), 1):
        try:
            value = int(token)
        except ValueError as e:
            raise SequenceError(f"{path}: terme {position} non entier: '{token}'") from e
        terms.append(value)

    logger.info(f"{len(terms)} termes lus depuis {path}")
    return terms


@dataclass(frozen=True)
class SequenceSource:
    kind: str
    count: int = None
    path: str = None
    values: tuple = ()

    def __post_init__(self):
        if self.kind not in SEQUENCE_KINDS:
            raise SequenceError(f"Source inconnue: {self.kind} (attendu: {', '.join(SEQUENCE_KINDS)})")
        if self.count is not None and self.count < 0:
            raise SequenceError(f"Nombre de termes négatif: {self.count}")

    @classmethod
    def of_primes(cls, count=None):
        return cls('primes', count=count)

    @classmethod
    def from_file(cls, path, count=None):
        return cls('file', count=count, path=str(path))

    @classmethod
    def from_values(cls, values):
        values = tuple(int(v) for v in values)
        return cls('list', count=len(values), values=values)

    def terms(self, default_count=DEFAULT_TERM_COUNT):
        """
        Produit les termes à consommer

        Args:
            default_count: Nombre de premiers si la source n'en fixe pas

        Returns:
            list: Entiers positifs
        """
        if self.kind == 'primes':
            return primes(self.count if self.count is not None else default_count)

        available = list(self.values) if self.kind == 'list' else read_sequence_file(self.path)
        count = len(available) if self.count is None else self.count
        if count > len(available):
            raise SequenceError(f"{count} termes demandés, {len(available)} disponibles")

        terms = available[:count]
        invalid = [t for t in terms if t < 1]
        if invalid:
            raise SequenceError(f"Termes non positifs: {invalid[:5]}")
        return terms


# ============================================================
# CONFIGURATION ET TYPES
# ============================================================

@dataclass(frozen=True)
class ComposerConfig:
    mode: Mode = field(default_factory=lambda: Mode(Scale(MAJOR_MODE)))
    root: int = DEFAULT_ROOT
    base_pitch: int = None      # None: hauteur du ton de départ
    system: object = STANDARD
    rhythm_palette: tuple = (TICKS_PER_QUARTER,)
    term_count: int = DEFAULT_TERM_COUNT

    def __post_init__(self):
        if self.base_pitch is None:
            object.__setattr__(self, 'base_pitch', self.root)
        object.__setattr__(self, 'rhythm_palette', tuple(self.rhythm_palette))

    @property
    def k(self):
        return self.mode.k

    @property
    def pitch_classes(self):
        return rooted_pitch_classes(self.mode, self.root)


@dataclass(frozen=True)
class Beat:
    source_term: int
    melody: int
    harmony: int
    duration: int
    melody_degree: int = None
    harmony_interval: int = None

    @property
    def is_rest(self):
        return self.melody is None


@dataclass(frozen=True)
class Duet:
    beats: tuple
    config: ComposerConfig

    @property
    def term_count(self):
        return len(self.beats)

    @property
    def total_ticks(self):
        return sum(b.duration for b in self.beats)


# ============================================================
# CORRESPONDANCES TERME -> MUSIQUE
# ============================================================

def melody_degree(a, k):
    """Degré a mod (k+1); un reste nul donne un silence (None)"""
    r = a % (k + 1)
    return r or None


def realize_melody(degree, cfg):
    """Hauteur du degré dans l'octave de référence (degré 1 = base_pitch)"""
    return cfg.base_pitch + cfg.mode.tones[degree - 1] - 1


def harmony_interval_for(a, system):
    """
    Intervalle harmonique associé au terme: le r-ième plus petit, r = a mod (n+1)

    Returns:
        int ou None: None pour un reste nul (silence)
    """
    r = a % (len(system.intervals) + 1)
    return system.intervals[r - 1] if r else None


def derive_harmony(melody, iv, cfg):
    """
    Note d'harmonie sous la mélodie, ou None si sa classe sort du mode
    """
    h = melody - iv
    return h if pitch_class(h) in cfg.pitch_classes else None


def rhythm_duration(a, palette):
    """Durée a mod (n+1); un reste nul reprend la première valeur"""
    r = a % (len(palette) + 1)
    return palette[r - 1] if r else palette[0]


def parse_rhythm_palette(text, ticks_per_quarter=TICKS_PER_QUARTER):
    """
    Palette rythmique depuis "quarter,eighth,half" ou des ticks "480,240"

    Returns:
        tuple: Durées en ticks

    Raises:
        InvalidConfigError: valeur inconnue, nulle ou palette trop longue
    """
    palette = []
    for part in (p.strip() for p in text.split(',')):
        if not part:
            continue
        if part.isdigit():
            ticks = int(part)
        elif part.lower() in RHYTHM_VALUES:
            ticks = RHYTHM_VALUES[part.lower()] * ticks_per_quarter
            if ticks != int(ticks):
                raise InvalidConfigError([f"'{part}' ne tombe pas sur un tick entier"])
            ticks = int(ticks)
        else:
            raise InvalidConfigError(
                [f"Valeur rythmique inconnue: '{part}' (attendu: {', '.join(RHYTHM_VALUES)} ou ticks)"]
            )
        if ticks <= 0:
            raise InvalidConfigError([f"Durée non positive: {part}"])
        palette.append(ticks)

    if not 1 <= len(palette) <= MAX_PALETTE_SIZE:
        raise InvalidConfigError([f"La palette doit compter 1 à {MAX_PALETTE_SIZE} valeurs"])
    return tuple(palette)


# ============================================================
# COMPOSITION
# ============================================================

def compose_beat(a, cfg):
    """Un terme pilote la mélodie, l'harmonie et la durée du temps"""
    duration = rhythm_duration(a, cfg.rhythm_palette)

    degree = melody_degree(a, cfg.k)
    if degree is None:
        return Beat(source_term=a, melody=None, harmony=None, duration=duration)

    melody = realize_melody(degree, cfg)
    iv = harmony_interval_for(a, cfg.system)
    harmony = derive_harmony(melody, iv, cfg) if iv is not None else None

    return Beat(
        source_term=a,
        melody=melody,
        harmony=harmony,
        duration=duration,
        melody_degree=degree,
        harmony_interval=iv
    )


def compose(seq, cfg):
    """
    Compose un duo à partir d'une source de termes

    Args:
        seq: SequenceSource
        cfg: ComposerConfig

    Returns:
        Duet: un temps par terme, dans l'ordre de la séquence

    Raises:
        InvalidConfigError: configuration invalide
        SequenceError, OSError: source illisible
    """
    report = validate_composer_config(cfg)
    if not report['valid']:
        raise InvalidConfigError(report['errors'])
    for warning in report['warnings']:
        logger.warning(warning)

    terms = seq.terms(cfg.term_count)
    beats = tuple(compose_beat(a, cfg) for a in terms)
    duet = Duet(beats=beats, config=cfg)

    harmonised = sum(1 for b in beats if b.harmony is not None)
    logger.info(
        f"Duo composé: {len(beats)} temps, {harmonised} notes d'harmonie, "
        f"mode {cfg.mode} depuis {cfg.root}"
    )
    return duet
