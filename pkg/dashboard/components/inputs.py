"""
inputs.py
---------

Description:
    Sidebar input widgets for the Cayley spectra dashboard. Group and
    connection-set strings use the same grammar as the command line, so a
    graph entered here can be pasted straight into `python -m src.cli`.
"""

import streamlit as st

from src.cayley import parse_connection, parse_group
from src.errors import CayleyError


def graph_inputs(default_group="cyclic:12", default_connection="unitary"):
    """
    Reads a group and connection set from the sidebar.
    Returns (group, S), or (None, None) after showing the parse error.
    """
    group_text = st.sidebar.text_input("Group", value=default_group, help="cyclic:6, dihedral:5, cyclic:3 x dihedral:5")
    connection_text = st.sidebar.text_input(
        "Connection set", value=default_connection, help="unitary, gcdclass:2, explicit:1,5 ; explicit:r1,r4"
    )
    try:
        group = parse_group(group_text)
        return group, parse_connection(group, connection_text)
    except CayleyError as e:
        st.sidebar.error(str(e))
        return None, None


def group_input(default_group="dihedral:5"):
    group_text = st.sidebar.text_input("Group", value=default_group)
    try:
        return parse_group(group_text)
    except CayleyError as e:
        st.sidebar.error(str(e))
        return None
