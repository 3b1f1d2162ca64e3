"""
Exceptions du moteur de modes musicaux
"""


class MusicTheoryError(ValueError):
    """Erreur de base du projet"""


class InvalidScaleError(MusicTheoryError):
    """Gamme invalide (tons hors 1..12, doublons, ordre)"""


class InvalidToneCountError(MusicTheoryError):
    """Nombre de tons k hors de 1..12"""

    def __init__(self, k):
        super().__init__(f"Nombre de tons invalide: {k} (attendu: 1..12)")
        self.k = k


class OutOfRangeError(MusicTheoryError):
    """Transposition dépassant le ton 12"""


class NotAChordError(MusicTheoryError):
    """Ensemble de tons qui n'est pas un accord harmonique"""


class InvalidConfigError(MusicTheoryError):
    """Configuration de composition invalide"""

    def __init__(self, errors):
        super().__init__("Configuration invalide: " + "; ".join(errors))
        self.errors = list(errors)


class SequenceError(MusicTheoryError):
    """Source de séquence illisible ou insuffisante"""


class PitchOutOfRangeError(MusicTheoryError):
    """Hauteur hors de la plage MIDI 0..127"""

    def __init__(self, beat_index, voice, pitch, midi_note):
        super().__init__(
            f"Temps {beat_index}: hauteur {pitch} ({voice}) donne la note MIDI "
            f"{midi_note}, hors de 0..127"
        )
        self.beat_index = beat_index
        self.voice = voice
        self.pitch = pitch
        self.midi_note = midi_note
