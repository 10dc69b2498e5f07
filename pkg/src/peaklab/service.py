"""HTTP face of the package: one endpoint per command.

Errors use a uniform envelope: HTTP 400 with detail {"code", "message"},
where code is "invalid-input" for bad requests and "exhaustion-limit"
when a brute-force path would exceed its bound.
"""

from fastapi import FastAPI, HTTPException

from . import __version__, oracle
from .closedforms import multinomial_count, p_3block, p_single
from .compositions import (Composition, PeakSet, composition_to_peakset,
                           is_admissible, peakset_to_composition,
                           three_factorization)
from .fastcount import count_fast
from .maximality import exact_maximal, verify_theorems, all_verified
from .schemas import (CountRequest, CountResponse, EnumerateRequest,
                      EnumerateResponse, FactorizeRequest, FactorizeResponse,
                      MaximalRequest, MaximalityReportModel, TableRequest,
                      TableResponse, VerifyRequest, VerifyResponse)

app = FastAPI(title="peaklab", version=__version__)

_METHODS = ("fast", "brute", "formula")


def _invalid(message):
    return HTTPException(status_code=400,
                         detail={"code": "invalid-input", "message": message})


def _exhausted(message):
    return HTTPException(status_code=400,
                         detail={"code": "exhaustion-limit", "message": message})


def _parse_composition(text):
    try:
        return Composition.from_string(text)
    except ValueError as exc:
        raise _invalid("bad composition %r: %s" % (text, exc))


@app.get("/health")
def health():
    return {"status": "ok", "version": __version__}


def _formula_count(c):
    n = c.size
    if len(c) == 1:
        return p_single(n)
    if len(c) == 2 and c[0] == 3 and n >= 5:
        return p_3block(n)
    f = three_factorization(c)
    if f.k >= 1 and len(f.factors[-1]) > 0:
        return multinomial_count(f)
    raise _invalid("no stated formula applies to %s" % (c,))


@app.post("/count", response_model=CountResponse)
def count(req: CountRequest):
    if (req.composition is None) == (req.peakset is None):
        raise _invalid("provide exactly one of composition or peakset")
    if req.composition is not None:
        c = _parse_composition(req.composition)
    else:
        if req.n is None:
            raise _invalid("peakset input needs n")
        try:
            c = peakset_to_composition(PeakSet.from_string(req.peakset, req.n))
        except ValueError as exc:
            raise _invalid("bad peak set %r: %s" % (req.peakset, exc))
    if not req.methods:
        raise _invalid("need at least one method")
    for m in req.methods:
        if m not in _METHODS:
            raise _invalid("unknown method %r" % m)

    values = {}
    for m in req.methods:
        if m == "fast":
            values[m] = count_fast(c)
        elif m == "brute":
            try:
                values[m] = oracle.count_bruteforce(c)
            except oracle.ExhaustionLimitError as exc:
                raise _exhausted(str(exc))
        else:
            if not is_admissible(c):
                values[m] = 0
            else:
                values[m] = _formula_count(c)

    agree = len(set(values.values())) == 1
    return CountResponse(
        n=c.size,
        composition=str(c),
        peakset=str(composition_to_peakset(c)) if is_admissible(c) else None,
        count=str(values[req.methods[0]]),
        method=",".join(req.methods),
        counts_by_method={m: str(v) for m, v in values.items()},
        agree=agree,
    )


@app.post("/table", response_model=TableResponse)
def table(req: TableRequest):
    c = _parse_composition(req.composition)
    if req.stat not in ("int", "ini", "t"):
        raise _invalid("stat must be one of int, ini, t")
    if len(c) == 0:
        raise _invalid("tables need a nonempty composition")
    n = c.size
    try:
        if req.stat == "t":
            rows = [list(oracle.t_vector(c))]
            row_labels = None
        else:
            matrix = (oracle.int_matrix(c) if req.stat == "int"
                      else oracle.ini_matrix(c))
            rows = [list(r) for r in matrix.rows()]
            row_labels = list(range(1, n + 1))
    except oracle.ExhaustionLimitError as exc:
        raise _exhausted(str(exc))
    return TableResponse(n=n, composition=str(c), stat=req.stat,
                         row_labels=row_labels,
                         col_labels=list(range(1, n + 1)), rows=rows)


def _report_model(report):
    data = report.to_json_dict()
    return MaximalityReportModel(**data)


@app.post("/maximal", response_model=MaximalityReportModel)
def maximal(req: MaximalRequest):
    if req.n < 1:
        raise _invalid("n must be >= 1")
    report = exact_maximal(req.n, use_pruning=req.prune,
                           include_counts=req.include_counts)
    return _report_model(report)


@app.post("/verify", response_model=VerifyResponse)
def verify(req: VerifyRequest):
    if not 6 <= req.n_from <= req.n_to:
        raise _invalid("range must satisfy 6 <= from <= to")
    reports = verify_theorems(req.n_from, req.n_to, use_pruning=req.prune)
    return VerifyResponse(n_from=req.n_from, n_to=req.n_to,
                          all_match=all_verified(reports),
                          reports=[_report_model(r) for r in reports])


@app.post("/factorize", response_model=FactorizeResponse)
def factorize(req: FactorizeRequest):
    c = _parse_composition(req.composition)
    f = three_factorization(c)
    return FactorizeResponse(composition=str(c), k=f.k,
                             factors=[str(x) for x in f.factors])


@app.post("/enumerate", response_model=EnumerateResponse)
def enumerate_class(req: EnumerateRequest):
    c = _parse_composition(req.composition)
    if req.limit is not None and req.limit < 0:
        raise _invalid("limit must be >= 0")
    try:
        members = []
        for w in oracle.permutations_with_composition(c):
            if req.limit is not None and len(members) >= req.limit:
                break
            members.append(list(w))
    except oracle.ExhaustionLimitError as exc:
        raise _exhausted(str(exc))
    return EnumerateResponse(composition=str(c), n=c.size,
                             total=str(count_fast(c)), permutations=members)
