"""
app.py
------

Description:
    This Streamlit dashboard provides an interactive front end for the Cayley
    spectra toolkit. It shows closed-form spectra, maximum-nullity bounds,
    character tables and Ramanujan sums for graphs entered in the sidebar.

This program:
    Parses the group and connection set typed into the sidebar.
    Displays the closed-form spectrum and, on request, the oracle comparison.
    Displays the nullity / minimum-rank bound with its per-divisor table.
    Displays character tables and Ramanujan sum tables.

Usage:
    streamlit run dashboard/app.py
"""

import os
import sys

import streamlit as st

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from components.inputs import graph_inputs, group_input  # noqa: E402
from src import config  # noqa: E402
from src.characters import character_table  # noqa: E402
from src.errors import CayleyError  # noqa: E402
from src.nullity import bound_for, check_bound_against_oracle  # noqa: E402
from src.numtheory import ramanujan_table  # noqa: E402
from src.oracle import verify_spectrum  # noqa: E402
from src.report import bound_frame, character_frame, divisor_frame, ramanujan_frame, spectrum_frame, verification_frame  # noqa: E402
from src.spectrum import closed_form_spectrum  # noqa: E402

# ----------------------------------------
# Streamlit Dashboard Layout
# ----------------------------------------

st.set_page_config(page_title="Cayley Graph Spectra", layout="wide")

st.title("Cayley Graph Spectra")
st.markdown("### Closed-form spectra, nullity bounds and brute-force checks")

st.sidebar.header("Navigation")
section = st.sidebar.radio(
    "Go to:", ["Overview", "Spectrum", "Nullity Bounds", "Character Tables", "Ramanujan Sums"]
)

# ----------------------------------------
# Sections
# ----------------------------------------

if section == "Overview":
    st.subheader("Overview")
    st.write("""
    The spectrum of a Cayley graph X_S(G) can be read from the irreducible
    characters of G. This dashboard evaluates those closed forms for cyclic
    groups, odd dihedral groups and their direct products, and checks them
    against a dense eigensolver.
    - **Spectrum:** closed-form eigenvalues with multiplicities
    - **Nullity Bounds:** M(G) >= largest multiplicity, mr(G) = |G| - M(G)
    - **Character Tables / Ramanujan Sums:** the ingredients of the formulas
    """)

elif section == "Spectrum":
    group, S = graph_inputs()
    if group is not None:
        try:
            spec = closed_form_spectrum(group, S)
            st.metric("Vertices", group.order)
            st.metric("Degree", S.size)
            st.dataframe(spectrum_frame(spec))
            if st.button("Verify against oracle"):
                if group.order > config.MAX_ORDER:
                    st.warning(f"Group order {group.order} is above the oracle cap of {config.MAX_ORDER}.")
                else:
                    report = verify_spectrum(spec, group, S)
                    if report.matched:
                        st.success(f"Matched. Largest eigenvalue error {report.max_value_error:.2e}.")
                    else:
                        st.error("Closed form and oracle disagree.")
                        st.dataframe(verification_frame(report))
        except CayleyError as e:
            st.error(str(e))

elif section == "Nullity Bounds":
    group, S = graph_inputs()
    if group is not None:
        try:
            report = bound_for(group, S)
            if st.checkbox("Audit against oracle"):
                report = check_bound_against_oracle(group, S, report.claimed, base=report)
            st.metric("Maximum nullity lower bound", report.effective_bound)
            st.metric("Minimum rank upper bound", report.mr_upper)
            st.dataframe(bound_frame(report))
            if report.per_divisor:
                st.subheader("Per-divisor bounds")
                st.dataframe(divisor_frame(report))
        except CayleyError as e:
            st.error(str(e))

elif section == "Character Tables":
    group = group_input()
    if group is not None:
        if group.order > 256:
            st.warning("Tables are shown for groups of order 256 or less.")
        else:
            st.dataframe(character_frame(character_table(group)))

elif section == "Ramanujan Sums":
    n = st.sidebar.number_input("n", min_value=1, max_value=1000, value=12)
    st.dataframe(ramanujan_frame(ramanujan_table(int(n), direct=True)))
