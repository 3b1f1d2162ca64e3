"""
Module de validation des gammes, des configurations et des duos
"""
from config import MAX_PALETTE_SIZE, OCTAVE_SIZE
from score_io import pitch_to_midi
from theory import is_tone, pitch_class, rooted_pitch_classes


def validate_scale_values(values):
    """Valide une liste de tons avant construction d'une gamme"""
    errors = []
    warnings = []

    values = list(values)

    if len(values) == 0:
        errors.append("Aucun ton fourni")
    if len(values) > OCTAVE_SIZE:
        errors.append(f"{len(values)} tons fournis (maximum: {OCTAVE_SIZE})")

    out_of_range = [v for v in values if not is_tone(v)]
    if out_of_range:
        errors.append(f"Tons hors de 1..12: {out_of_range}")

    duplicates = sorted({v for v in values if values.count(v) > 1})
    if duplicates:
        errors.append(f"Tons répétés: {duplicates}")

    if values != sorted(values):
        warnings.append("Tons fournis dans le désordre, ils seront triés")

    return {
        'valid': len(errors) == 0,
        'errors': errors,
        'warnings': warnings
    }


def validate_composer_config(cfg):
    """Valide une configuration de composition"""
    errors = []
    warnings = []

    palette = list(cfg.rhythm_palette)
    if not palette:
        errors.append("Palette rythmique vide")
    if len(palette) > MAX_PALETTE_SIZE:
        errors.append(f"Palette rythmique de {len(palette)} valeurs (maximum: {MAX_PALETTE_SIZE})")
    non_positive = [d for d in palette if not isinstance(d, int) or d <= 0]
    if non_positive:
        errors.append(f"Durées non positives ou non entières: {non_positive}")

    if not is_tone(cfg.root):
        errors.append(f"Ton de départ hors de 1..12: {cfg.root}")
    elif pitch_class(cfg.base_pitch) != cfg.root:
        errors.append(
            f"La hauteur d'ancrage {cfg.base_pitch} n'a pas la classe du ton de départ {cfg.root}"
        )

    if cfg.term_count < 0:
        errors.append(f"Nombre de termes négatif: {cfg.term_count}")

    if cfg.mode.k < 3:
        warnings.append(f"Mode à {cfg.mode.k} tons: aucun accord possible")

    return {
        'valid': len(errors) == 0,
        'errors': errors,
        'warnings': warnings
    }


def validate_duet(duet):
    """Vérifie les invariants de chaque temps d'un duo"""
    errors = []
    warnings = []

    cfg = duet.config
    allowed = rooted_pitch_classes(cfg.mode, cfg.root)

    for i, beat in enumerate(duet.beats):
        if beat.duration <= 0:
            errors.append(f"Temps {i}: durée non positive ({beat.duration})")

        if beat.harmony is not None and beat.melody is None:
            errors.append(f"Temps {i}: harmonie sans mélodie")

        if beat.melody is not None and pitch_class(beat.melody) not in allowed:
            errors.append(f"Temps {i}: mélodie {beat.melody} hors du mode")

        if beat.harmony is not None:
            if pitch_class(beat.harmony) not in allowed:
                errors.append(f"Temps {i}: harmonie {beat.harmony} hors du mode")
            if beat.melody is not None and beat.melody - beat.harmony not in cfg.system.intervals:
                errors.append(
                    f"Temps {i}: écart {beat.melody - beat.harmony} non harmonique"
                )

    if duet.beats:
        rests = sum(1 for b in duet.beats if b.harmony is None)
        ratio = rests / len(duet.beats)
        if ratio > 0.5:
            warnings.append(f"{ratio:.0%} des temps de l'harmonie sont des silences")

    return {
        'valid': len(errors) == 0,
        'errors': errors,
        'warnings': warnings
    }


def validate_midi_range(duet, midi_cfg):
    """Vérifie que chaque hauteur tombe dans 0..127 une fois convertie"""
    errors = []
    warnings = []

    for i, beat in enumerate(duet.beats):
        for voice, pitch in (('mélodie', beat.melody), ('harmonie', beat.harmony)):
            if pitch is None:
                continue
            note = pitch_to_midi(pitch, midi_cfg)
            if not 0 <= note <= 127:
                errors.append(f"Temps {i}: {voice} {pitch} -> note MIDI {note} hors de 0..127")

    return {
        'valid': len(errors) == 0,
        'errors': errors,
        'warnings': warnings
    }
