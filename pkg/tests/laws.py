"""Count, naming and fidelity laws checked against a transform result."""

from __future__ import annotations

from oracle import expected_counts


def actual_counts(psm) -> dict[str, int]:
    dp, bp = psm.dao_package, psm.business_package
    return {
        "pojos": len(dp.pojos), "daos": len(dp.daos), "daoimpls": len(dp.daoimpls),
        "dtos": len(bp.dtos), "services": len(bp.services), "serviceimpls": len(bp.serviceimpls),
        "pages": len(psm.pages), "actions": len(psm.actions), "forms": len(psm.forms),
    }


def law_violations(pim, psm) -> list[str]:
    out = []
    exp, got = expected_counts(pim), actual_counts(psm)
    out += [f"count {k}: expected {exp[k]}, got {got[k]}" for k in exp if exp[k] != got[k]]
    if psm.name != "crud" + pim.name:
        out.append(f"root name {psm.name!r}")
    dp, bp = psm.dao_package, psm.business_package
    for i, c in enumerate(pim.classes):
        expected = {
            "pojo": (dp.pojos, c.name),
            "dao": (dp.daos, "I" + c.name + "Dao"),
            "daoimpl": (dp.daoimpls, c.name + "DaoImpl"),
            "dto": (bp.dtos, c.name + "DTO"),
            "service": (bp.services, "I" + c.name + "Service"),
            "serviceimpl": (bp.serviceimpls, c.name + "ServiceImpl"),
        }
        for kind, (elements, name) in expected.items():
            if i >= len(elements) or elements[i].name != name:
                out.append(f"{kind} #{i} should be {name!r}")
        ops = [(o.name, tuple((p.name, p.type, p.direction) for p in o.parameters)) for o in c.operations]
        for iface in (dp.daos[i], bp.services[i]):
            got_ops = [(m.name, tuple((p.name, p.type, p.direction) for p in m.parameters)) for m in iface.methods]
            if got_ops != ops:
                out.append(f"methods of {iface.name!r} differ from operations of {c.name!r}")
    pages = [o[0].upper() + o[1:] + c.name + "Page.jsp" for c in pim.classes for o in (op.name for op in c.operations) if o.lower() != "remove"]
    if [p.name for p in psm.pages] != pages:
        out.append("page names")
    actions = []
    for c in pim.classes:
        for o in (op.name for op in c.operations):
            cap = o[0].upper() + o[1:]
            actions.append(cap + c.name + "Action")
            if o.lower() in ("create", "update"):
                actions.append(cap + c.name + "EndAction")
    if [a.name for a in psm.actions] != actions:
        out.append("action names")
    return out
