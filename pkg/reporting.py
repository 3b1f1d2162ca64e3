"""
Module utilitaire de synthèse: tableaux pandas et résumés pour la CLI et l'interface
"""

import pandas as pd

from harmony import is_classical_pattern
from score_io import MidiConfig, pitch_label, pitch_to_midi
from theory import format_names, format_tones


def ranking_frame(reports):
    """
    Tableau d'un classement de modes

    Args:
        reports: Liste de MusicalityReport (déjà triée)

    Returns:
        DataFrame: rank, mode, names, k, musicality
    """
    return pd.DataFrame({
        'rank': range(1, len(reports) + 1),
        'mode': [format_tones(r.mode.tones) for r in reports],
        'names': [format_names(r.mode.tones) for r in reports],
        'k': [r.mode.k for r in reports],
        'musicality': [r.musicality for r in reports]
    })


def chord_frame(chords):
    """
    Tableau des accords d'une gamme avec leurs motifs de pas

    Returns:
        DataFrame: tones, names, pattern, size, classical
    """
    return pd.DataFrame({
        'tones': [format_tones(c.tones) for c in chords],
        'names': [format_names(c.tones) for c in chords],
        'pattern': [format_tones(c.pattern) for c in chords],
        'size': [c.size for c in chords],
        'classical': [c.size == 3 and is_classical_pattern(c.pattern) for c in chords]
    }, columns=['tones', 'names', 'pattern', 'size', 'classical'])


def duet_frame(duet, cfg=MidiConfig()):
    """
    Tableau temps par temps d'un duo, avec date de début en ticks

    Returns:
        DataFrame: beat, term, onset, duration, melody, harmony, labels, notes MIDI
    """
    rows = []
    onset = 0
    for index, beat in enumerate(duet.beats, 1):
        rows.append({
            'beat': index,
            'term': beat.source_term,
            'onset': onset,
            'duration': beat.duration,
            'melody': beat.melody,
            'harmony': beat.harmony,
            'melody_label': pitch_label(beat.melody, cfg),
            'harmony_label': pitch_label(beat.harmony, cfg),
            'melody_midi': None if beat.melody is None else pitch_to_midi(beat.melody, cfg),
            'harmony_midi': None if beat.harmony is None else pitch_to_midi(beat.harmony, cfg)
        })
        onset += beat.duration

    columns = [
        'beat', 'term', 'onset', 'duration', 'melody', 'harmony',
        'melody_label', 'harmony_label', 'melody_midi', 'harmony_midi'
    ]
    return pd.DataFrame(rows, columns=columns)


def get_ranking_summary(reports):
    """
    Génère un résumé d'un classement

    Returns:
        dict: Statistiques de musicalité
    """
    values = pd.Series([r.musicality for r in reports], dtype='int64')
    best = int(values.max()) if len(values) else 0

    summary = {
        'total_modes': len(reports),
        'max_musicality': best,
        'min_musicality': int(values.min()) if len(values) else 0,
        'avg_musicality': round(float(values.mean()), 3) if len(values) else 0.0,
        'modes_at_max': int((values == best).sum()),
        'distribution': {int(v): int(n) for v, n in values.value_counts().sort_index().items()}
    }

    return summary


def get_top_modes(reports, top_n=10):
    """Les top_n premiers modes d'un classement déjà trié"""
    return list(reports[:top_n])


def get_duet_summary(duet):
    """
    Génère un résumé d'un duo

    Returns:
        dict: Comptes de notes et de silences, étendue des hauteurs
    """
    beats = duet.beats
    melody = [b.melody for b in beats if b.melody is not None]
    harmony = [b.harmony for b in beats if b.harmony is not None]
    pitches = melody + harmony

    summary = {
        'beats': len(beats),
        'melody_notes': len(melody),
        'melody_rests': len(beats) - len(melody),
        'harmony_notes': len(harmony),
        'harmony_rests': len(beats) - len(harmony),
        'harmony_ratio': round(len(harmony) / len(beats), 3) if beats else 0.0,
        'total_ticks': duet.total_ticks,
        'lowest_pitch': min(pitches) if pitches else None,
        'highest_pitch': max(pitches) if pitches else None
    }

    return summary
