import plotly.graph_objects as go
import streamlit as st

from composer import ComposerConfig, SequenceSource, compose, parse_rhythm_palette
from config import DEFAULT_TERM_COUNT, MAJOR_MODE, RHYTHM_VALUES, TONE_NAMES
from errors import MusicTheoryError
from harmony import STANDARD
from logger import logger
from reporting import duet_frame, get_duet_summary
from theory import Mode, Scale
from validation import validate_duet

st.set_page_config(page_title="Composition", layout="wide")

st.title("Composition d'un duo")
st.markdown("### Mélodie, harmonie et rythme tirés d'une suite d'entiers")

mode = st.session_state.get('mode') or Mode(Scale(MAJOR_MODE))
system = st.session_state.get('system') or STANDARD

st.info(f"Mode: **{mode}** ({mode.k} tons) - système {system.name}")

col1, col2, col3 = st.columns(3)

with col1:
    root = st.selectbox("Ton de départ", list(TONE_NAMES), format_func=lambda t: TONE_NAMES[t])
with col2:
    rhythm = st.multiselect("Valeurs rythmiques", list(RHYTHM_VALUES), default=['quarter'])
with col3:
    source_kind = st.radio("Suite", ["Nombres premiers", "Fichier"], horizontal=True)

if source_kind == "Nombres premiers":
    count = st.number_input("Nombre de termes", 0, 5000, DEFAULT_TERM_COUNT)
    source = SequenceSource.of_primes(int(count))
else:
    uploaded = st.file_uploader("Fichier texte d'entiers", type=['txt'])
    if uploaded is None:
        st.warning("Charge un fichier pour continuer")
        st.stop()
    try:
        source = SequenceSource.from_values(int(t) for t in uploaded.read().decode('utf-8').split())
    except ValueError as e:
        st.error(f"Fichier invalide: {e}")
        st.stop()

if st.button("Composer", type="primary", use_container_width=True):
    try:
        cfg = ComposerConfig(
            mode=mode,
            root=root,
            system=system,
            rhythm_palette=parse_rhythm_palette(','.join(rhythm or ['quarter']))
        )
        with st.spinner("Composition en cours..."):
            st.session_state['duet'] = compose(source, cfg)
    except MusicTheoryError as e:
        st.error(f"Erreur de composition: {e}")
        logger.error(f"Erreur composition: {e}")

duet = st.session_state.get('duet')

if duet is not None:
    summary = get_duet_summary(duet)
    report = validate_duet(duet)

    col1, col2, col3, col4 = st.columns(4)
    with col1:
        st.metric("Temps", summary['beats'])
    with col2:
        st.metric("Notes d'harmonie", summary['harmony_notes'], f"{summary['harmony_ratio']:.0%}")
    with col3:
        st.metric("Silences mélodie", summary['melody_rests'])
    with col4:
        st.metric("Durée (ticks)", f"{summary['total_ticks']:,}")

    if report['valid']:
        st.success("Tous les invariants du duo sont respectés")
    for error in report['errors']:
        st.error(f"• {error}")
    for warning in report['warnings']:
        st.warning(f"• {warning}")

    df = duet_frame(duet)

    # Rouleau de piano: une barre par note
    fig = go.Figure()
    for voice, color in (('melody', '#1f77b4'), ('harmony', '#d62728')):
        notes = df.dropna(subset=[f'{voice}_midi'])
        fig.add_trace(go.Bar(
            name=voice,
            x=notes['duration'],
            base=notes['onset'],
            y=notes[f'{voice}_midi'],
            orientation='h',
            marker_color=color,
            hovertext=notes[f'{voice}_label']
        ))
    fig.update_layout(title='Rouleau de piano', xaxis_title='ticks', yaxis_title='note MIDI', barmode='overlay')
    st.plotly_chart(fig, use_container_width=True)

    st.dataframe(df, use_container_width=True, hide_index=True, height=400)
