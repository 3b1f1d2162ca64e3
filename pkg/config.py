"""
Configuration et constantes du moteur de modes musicaux
"""

# ============================================================
# TONS ET NOMS
# ============================================================
# Numérotation des 12 tons de l'octave (A=1 ... G#=12)
TONE_NAMES = {
    1: 'A',
    2: 'A#',
    3: 'B',
    4: 'C',
    5: 'C#',
    6: 'D',
    7: 'D#',
    8: 'E',
    9: 'F',
    10: 'F#',
    11: 'G',
    12: 'G#'
}

OCTAVE_SIZE = 12

# ============================================================
# INTERVALLES HARMONIQUES
# ============================================================
STANDARD_INTERVALS = (3, 4, 5, 7, 8, 9)

# Le triton (6 demi-tons) ajoute les accords diminués et de septième
EXTENDED_INTERVALS = (3, 4, 5, 6, 7, 8, 9)

# Les cinq types d'accords classiques (n2-n1, n3-n2)
CLASSICAL_STEP_PATTERNS = (
    (3, 4),
    (4, 3),
    (3, 5),
    (5, 3),
    (4, 4)
)

# ============================================================
# MODES DE RÉFÉRENCE
# ============================================================
MAJOR_MODE = (1, 3, 5, 6, 8, 10, 12)
MINOR_MODE = (1, 3, 4, 6, 8, 9, 11)
CHROMATIC_MODE = tuple(range(1, OCTAVE_SIZE + 1))

# ============================================================
# DIAGRAMME (SVG)
# ============================================================
CANVAS_SIZE = 1000
CHART_CENTER = (500.0, 500.0)
CHART_RADIUS = 400.0
POINT_RADIUS = 14
LABEL_OFFSET = 42.0
COORD_PRECISION = 3

CIRCLE_STROKE = '#999999'
EDGE_STROKE_WIDTH = 3
CLIQUE_FILL_OPACITY = 0.15
CLIQUE_FILL = '#ffb000'
POINT_FILL = '#222222'
LABEL_FONT_FAMILY = 'sans-serif'
LABEL_FONT_SIZE = 22

# Une couleur par taille d'intervalle
INTERVAL_COLORS = {
    3: '#1f77b4',
    4: '#2ca02c',
    5: '#9467bd',
    6: '#7f7f7f',
    7: '#d62728',
    8: '#ff7f0e',
    9: '#17becf'
}

# ============================================================
# MIDI
# ============================================================
TICKS_PER_QUARTER = 480
TEMPO = 500000            # microsecondes par noire (120 bpm)
BASE_MIDI_NOTE = 57       # hauteur 1 = A sous le do central
MELODY_PROGRAM = 0        # Acoustic Grand Piano
HARMONY_PROGRAM = 0
MELODY_CHANNEL = 0
HARMONY_CHANNEL = 1
VELOCITY = 80

# ============================================================
# VALEURS RYTHMIQUES
# ============================================================
# Durées exprimées en multiples de la noire
RHYTHM_VALUES = {
    'whole': 4.0,
    'dotted-half': 3.0,
    'half': 2.0,
    'dotted-quarter': 1.5,
    'quarter': 1.0,
    'dotted-eighth': 0.75,
    'eighth': 0.5,
    'sixteenth': 0.25
}

MAX_PALETTE_SIZE = 12

# ============================================================
# COMPOSITION PAR DÉFAUT
# ============================================================
DEFAULT_TERM_COUNT = 500
DEFAULT_ROOT = 1
DEFAULT_RHYTHM = ('quarter',)

# ============================================================
# LOGGING
# ============================================================
LOG_NAME = 'music_by_numbers'
LOG_DIR = 'logs'
LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
LOG_DATEFMT = '%Y-%m-%d %H:%M:%S'
LOG_CONSOLE_LEVEL = 'WARNING'
