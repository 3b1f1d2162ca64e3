import streamlit as st

from chart import find_cliques, harmonic_edges, render_svg
from config import MINOR_MODE, TONE_NAMES
from errors import MusicTheoryError
from harmony import STANDARD, enumerate_chords, musicality
from reporting import chord_frame
from theory import canonicalize, format_tones, parse_scale, transpose, valid_roots
from validation import validate_scale_values

st.set_page_config(page_title="Analyse", layout="wide")

st.title("Analyse d'un mode")
st.markdown("### Accords harmoniques, motifs de pas et diagramme")

current = st.session_state.get('mode')
system = st.session_state.get('system') or STANDARD

text = st.text_input(
    "Mode (numéros ou noms)",
    value=str(current) if current is not None else format_tones(MINOR_MODE)
)

try:
    scale = parse_scale(text)
except MusicTheoryError as e:
    st.error(f"Gamme invalide: {e}")
    values = [int(v) for v in text.replace(' ', '').split(',') if v.lstrip('-').isdigit()]
    for error in validate_scale_values(values)['errors']:
        st.error(f"• {error}")
    st.stop()

mode = canonicalize(scale)
st.session_state['mode'] = mode

roots = valid_roots(mode)
root = st.selectbox(
    "Ton de départ",
    roots,
    format_func=lambda t: f"{TONE_NAMES[t]} ({t})"
)
scale = transpose(mode, root)

chords = enumerate_chords(scale, system)
edges = harmonic_edges(scale, system)

col1, col2, col3 = st.columns(3)
with col1:
    st.metric("Musicalité", musicality(mode, system))
with col2:
    st.metric("Arêtes harmoniques", len(edges))
with col3:
    st.metric("Triangles", len(find_cliques(edges)))

col1, col2 = st.columns([1, 1])

with col1:
    st.markdown("#### Accords")
    if chords:
        frame = chord_frame(chords)
        st.dataframe(frame, use_container_width=True, hide_index=True)
        if (~frame['classical'] & (frame['size'] == 3)).any():
            st.caption("Certains motifs (4,5 ou 5,4) ne figurent pas parmi les cinq types classiques")
    else:
        st.warning("Aucun accord dans ce mode")

with col2:
    st.markdown("#### Diagramme")
    svg = render_svg(scale, system)
    st.session_state['svg'] = svg
    st.image(svg.decode('utf-8'))
