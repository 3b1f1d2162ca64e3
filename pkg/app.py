"""
Application Streamlit - Explorateur de modes musicaux
"""

import streamlit as st

from harmony import STANDARD
from theory import count_all_modes, count_scales

# Configuration de la page
st.set_page_config(
    page_title="Music by Numbers",
    layout="wide",
    initial_sidebar_state="expanded"
)

# ============================================================
# INITIALISATION SESSION STATE
# ============================================================
def init_session_state():
    """Initialise les variables de session"""
    session_vars = ['mode', 'reports', 'duet', 'svg']

    for var in session_vars:
        if var not in st.session_state:
            st.session_state[var] = None

    if 'system' not in st.session_state:
        st.session_state['system'] = STANDARD

init_session_state()

# ============================================================
# PAGE D'ACCUEIL
# ============================================================
st.title("Music by Numbers")
st.markdown("""
### Modes, accords harmoniques et duos composés à partir de suites d'entiers
""")

st.info(f"""
**Bienvenue !** Cette application te permet de :
- Parcourir et classer les {count_all_modes():,} modes par musicalité
- Analyser les accords d'un mode et voir son diagramme
- Composer un duo à partir des nombres premiers (ou de ta propre suite)
- Exporter le MIDI, la partition texte et le diagramme SVG
""")

with st.expander("Comment utiliser cette application ?", expanded=True):
    st.markdown(f"""
    **1. Modes** : énumération et classement des modes à k tons
    ({count_scales():,} gammes au total, 12 départs par mode)

    **2. Analyse** : accords, motifs de pas, diagramme circulaire

    **3. Composition** : mélodie (mod k+1), harmonie (mod 7), rythme (mod n+1)

    **4. Export** : fichiers MIDI, partition et SVG
    """)

# Barre latérale: état de la session
st.sidebar.markdown("---")
st.sidebar.markdown("### Session")

if st.session_state['mode'] is not None:
    st.sidebar.success(f"Mode choisi: {st.session_state['mode']}")
else:
    st.sidebar.warning("Aucun mode choisi")

if st.session_state['duet'] is not None:
    st.sidebar.success(f"Duo: {st.session_state['duet'].term_count} temps")

st.sidebar.info(f"Système: {st.session_state['system']}")
