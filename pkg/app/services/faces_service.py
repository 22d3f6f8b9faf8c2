from app.kernel.faces import disjunction_split, face_eq, face_join, face_leq, irreducibles_under
from app.kernel.parser import parse_query
from app.schemas.report import FacesResult


def run_query(expression: str) -> FacesResult:
    """
    Evaluate a face expression or query:

    - `phi` and `forall i. phi` print the normal form
    - `phi <= psi`, `phi == psi` answer true / false
    - `split phi psi` answers Left / Right / Neither for phi \\/ psi = 1
    - `irr phi` lists the irreducible faces under phi
    """
    query = parse_query(expression)
    faces = query.faces
    result = FacesResult(query=expression.strip(), kind=query.kind)
    if query.kind in ("normal", "forall"):
        result.normal_form = str(faces[0])
    elif query.kind == "leq":
        result.answer = str(face_leq(*faces)).lower()
    elif query.kind == "eq":
        result.answer = str(face_eq(*faces)).lower()
    elif query.kind == "split":
        result.normal_form = str(face_join(*faces))
        result.answer = disjunction_split(*faces).value
    elif query.kind == "irr":
        result.normal_form = str(faces[0])
        result.answer = ", ".join(str(alpha) for alpha in irreducibles_under(faces[0])) or "none"
    return result
