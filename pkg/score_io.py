"""
Module d'export des duos
Fichier MIDI standard (format 1) et partition texte
"""

import io
from dataclasses import dataclass

import mido

from config import (
    BASE_MIDI_NOTE, HARMONY_CHANNEL, HARMONY_PROGRAM, MELODY_CHANNEL, MELODY_PROGRAM, TEMPO,
    TICKS_PER_QUARTER, VELOCITY
)
from errors import PitchOutOfRangeError
from logger import logger
from theory import tone_name


@dataclass(frozen=True)
class MidiConfig:
    ticks_per_quarter: int = TICKS_PER_QUARTER
    tempo: int = TEMPO
    melody_program: int = MELODY_PROGRAM
    harmony_program: int = HARMONY_PROGRAM
    base_note: int = BASE_MIDI_NOTE
    velocity: int = VELOCITY


# ============================================================
# HAUTEURS
# ============================================================

def pitch_to_midi(pitch, cfg=MidiConfig()):
    """Correspondance linéaire: base_note + (hauteur - 1)"""
    return cfg.base_note + pitch - 1


def pitch_label(pitch, cfg=MidiConfig()):
    """Nom du ton et octave scientifique de la note MIDI (1 -> 'A3')"""
    if pitch is None:
        return 'rest'
    octave = pitch_to_midi(pitch, cfg) // 12 - 1
    return f"{tone_name(pitch)}{octave}"


def _checked_note(beat_index, voice, pitch, cfg):
    note = pitch_to_midi(pitch, cfg)
    if not 0 <= note <= 127:
        raise PitchOutOfRangeError(beat_index, voice, pitch, note)
    return note


# ============================================================
# MIDI
# ============================================================

def _voice_track(name, channel, program, pitches, durations, cfg):
    """
    Piste d'une voix: les silences deviennent des écarts de temps
    """
    track = mido.MidiTrack()
    track.append(mido.MetaMessage('track_name', name=name, time=0))
    track.append(mido.Message('program_change', channel=channel, program=program, time=0))

    pending = 0
    for index, (pitch, duration) in enumerate(zip(pitches, durations)):
        if pitch is None:
            pending += duration
            continue
        note = _checked_note(index, name, pitch, cfg)
        track.append(mido.Message('note_on', channel=channel, note=note, velocity=cfg.velocity, time=pending))
        track.append(mido.Message('note_off', channel=channel, note=note, velocity=0, time=duration))
        pending = 0

    # Un silence final reste compté dans le delta de fin de piste
    track.append(mido.MetaMessage('end_of_track', time=pending))
    return track


def build_midi(duet, cfg=MidiConfig()):
    """
    Construit le fichier MIDI: piste de tempo, piste mélodie, piste harmonie

    Raises:
        PitchOutOfRangeError: une hauteur sort de 0..127
    """
    midi = mido.MidiFile(type=1, ticks_per_beat=cfg.ticks_per_quarter)

    tempo_track = mido.MidiTrack()
    tempo_track.append(mido.MetaMessage('track_name', name='Tempo', time=0))
    tempo_track.append(mido.MetaMessage('set_tempo', tempo=cfg.tempo, time=0))
    tempo_track.append(mido.MetaMessage('time_signature', numerator=4, denominator=4, time=0))
    tempo_track.append(mido.MetaMessage('end_of_track', time=0))
    midi.tracks.append(tempo_track)

    durations = [b.duration for b in duet.beats]
    midi.tracks.append(_voice_track(
        'Melody', MELODY_CHANNEL, cfg.melody_program,
        [b.melody for b in duet.beats], durations, cfg
    ))
    midi.tracks.append(_voice_track(
        'Harmony', HARMONY_CHANNEL, cfg.harmony_program,
        [b.harmony for b in duet.beats], durations, cfg
    ))
    return midi


def write_midi(duet, cfg=MidiConfig()):
    """
    Sérialise un duo en fichier MIDI standard

    Returns:
        bytes: Contenu du fichier, identique à entrées identiques
    """
    buffer = io.BytesIO()
    build_midi(duet, cfg).save(file=buffer)
    data = buffer.getvalue()

    logger.info(f"MIDI généré: {len(duet.beats)} temps, {len(data)} octets")
    return data


def save_midi(duet, path, cfg=MidiConfig()):
    """Écrit le fichier MIDI sur disque"""
    data = write_midi(duet, cfg)
    with open(path, 'wb') as f:
        f.write(data)
    logger.info(f"MIDI sauvegardé dans {path}")
    return data


# ============================================================
# PARTITION TEXTE
# ============================================================

SCORE_HEADER = f"{'beat':>5}  {'term':>6}  {'melody':<7}  {'harmony':<7}  {'ticks':>5}"


def write_text_score(duet, cfg=MidiConfig()):
    """
    Partition lisible: une ligne par temps (indice, terme, mélodie, harmonie, durée)

    Returns:
        str: Texte UTF-8, en-tête compris
    """
    lines = [SCORE_HEADER]
    for index, beat in enumerate(duet.beats, 1):
        lines.append(
            f"{index:>5}  {beat.source_term:>6}  {pitch_label(beat.melody, cfg):<7}  "
            f"{pitch_label(beat.harmony, cfg):<7}  {beat.duration:>5}"
        )
    return '\n'.join(lines) + '\n'


def save_text_score(duet, path, cfg=MidiConfig()):
    text = write_text_score(duet, cfg)
    with open(path, 'w', encoding='utf-8') as f:
        f.write(text)
    logger.info(f"Partition sauvegardée dans {path}")
    return text
