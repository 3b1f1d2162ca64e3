import plotly.express as px
import streamlit as st

from harmony import HarmonicSystem, rank_modes
from logger import logger
from reporting import get_ranking_summary, ranking_frame
from theory import count_modes

st.set_page_config(page_title="Modes", layout="wide")

st.title("Modes et musicalité")
st.markdown("### Classement exhaustif des modes à k tons")

col1, col2 = st.columns(2)
with col1:
    k = st.slider("Nombre de tons k", 1, 12, 7)
with col2:
    extended = st.checkbox("Système étendu (triton harmonique)", value=False)

system = HarmonicSystem.from_flag(extended)
st.session_state['system'] = system

# Un classement ne vaut que pour le k et le système qui l'ont produit
ranking_key = (k, system.name)
if st.session_state.get('reports_key') != ranking_key:
    st.session_state['reports'] = None
    st.session_state['reports_key'] = ranking_key

st.caption(f"{count_modes(k):,} modes à {k} tons")

if st.button("Classer les modes", type="primary", use_container_width=True):
    with st.spinner("Classement en cours..."):
        reports = rank_modes(k, system)
        st.session_state['reports'] = reports
        logger.info(f"Classement affiché: k={k}, {system.name}")

reports = st.session_state.get('reports')

if reports:
    summary = get_ranking_summary(reports)

    col1, col2, col3, col4 = st.columns(4)
    with col1:
        st.metric("Modes", f"{summary['total_modes']:,}")
    with col2:
        st.metric("Musicalité max", summary['max_musicality'])
    with col3:
        st.metric("Modes au max", summary['modes_at_max'])
    with col4:
        st.metric("Musicalité moyenne", f"{summary['avg_musicality']:.2f}")

    df = ranking_frame(reports)

    fig = px.histogram(
        df,
        x='musicality',
        title='Distribution de la musicalité',
        nbins=max(1, summary['max_musicality'] + 1)
    )
    st.plotly_chart(fig, use_container_width=True)

    st.markdown("### Classement")
    st.dataframe(df, use_container_width=True, hide_index=True, height=400)

    choice = st.selectbox("Choisir un mode pour l'analyse", df['mode'].head(50))
    if st.button("Analyser ce mode"):
        st.session_state['mode'] = next(r.mode for r in reports if str(r.mode) == choice)
        st.success(f"Mode {choice} choisi. Allez dans **Analyse**")
else:
    st.info("Lance le classement pour voir les résultats")
