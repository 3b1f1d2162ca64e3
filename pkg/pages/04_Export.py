import streamlit as st

from errors import PitchOutOfRangeError
from score_io import write_midi, write_text_score
from theory import format_tones

st.set_page_config(page_title="Export", layout="wide")

st.title("Export")
st.markdown("### Télécharge le duo et le diagramme")

st.markdown("---")

duet = st.session_state.get('duet')

if duet is not None:
    st.markdown("### Duo")
    tag = format_tones(duet.config.mode.tones).replace(',', '-')

    col1, col2 = st.columns(2)

    with col1:
        try:
            st.download_button(
                label="Fichier MIDI",
                data=write_midi(duet),
                file_name=f"duo_{tag}.mid",
                mime="audio/midi",
                use_container_width=True
            )
        except PitchOutOfRangeError as e:
            st.error(f"Export MIDI impossible: {e}")

    with col2:
        score = write_text_score(duet)
        st.download_button(
            label="Partition texte",
            data=score,
            file_name=f"duo_{tag}.txt",
            mime="text/plain",
            use_container_width=True
        )

    with st.expander("Aperçu de la partition"):
        st.text(score)
else:
    st.warning("Aucun duo. Allez dans **Composition**")

st.markdown("---")

svg = st.session_state.get('svg')

if svg is not None:
    st.markdown("### Diagramme")
    st.download_button(
        label="Diagramme SVG",
        data=svg,
        file_name="diagramme.svg",
        mime="image/svg+xml",
        use_container_width=True
    )
else:
    st.warning("Aucun diagramme. Allez dans **Analyse**")
