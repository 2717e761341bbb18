from hypothesis import strategies as st

from avoid312.paths import DyckPath


@st.composite
def dyck_paths(draw, max_n=40):
    n = draw(st.integers(0, max_n))
    steps, ups, downs = [], 0, 0
    while downs < n:
        if ups < n and (downs == ups or draw(st.booleans())):
            steps.append("U")
            ups += 1
        else:
            steps.append("D")
            downs += 1
    return DyckPath("".join(steps))
