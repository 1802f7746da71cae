#!/usr/bin/env python3
"""Writes the XMI corpus under corpus/.

The overdruk model is a reconstruction of the overpressure safe-space base
functionality: enums and blocks, twelve leaf activities and the BF glue
activity that calls them. Ids are assigned from a counter so the output is
stable; rerun after editing and commit the result.
"""

import argparse
import pathlib
from xml.sax.saxutils import escape


def attr(value):
    return escape(value, {'"': "&quot;"})


class Ids:
    def __init__(self, prefix):
        self.prefix = prefix
        self.n = 0

    def __call__(self):
        self.n += 1
        return f"{self.prefix}_{self.n:04d}"


class Model:
    """Collects packaged elements and renders them as an EA style export."""

    def __init__(self, name, prefix="EAID"):
        self.name = name
        self.ids = Ids(prefix)
        self.types = {}  # type name -> id
        self.literals = {}  # literal name -> enum name
        self.elements = []  # rendered packagedElement blocks
        self.activities = {}  # activity name -> id

    # -- types -------------------------------------------------------------

    def enum(self, name, literals):
        eid = self.ids()
        self.types[name] = eid
        lines = [f'<packagedElement xmi:type="uml:Enumeration" xmi:id="{eid}" name="{name}" visibility="public">']
        for lit in literals:
            self.literals[lit] = name
            lines.append(f'  <ownedLiteral xmi:type="uml:EnumerationLiteral" xmi:id="{self.ids()}" name="{lit}"/>')
        lines.append("</packagedElement>")
        self.elements.append(lines)
        return eid

    def block(self, name, props):
        bid = self.ids()
        self.types[name] = bid
        lines = [f'<packagedElement xmi:type="uml:Class" xmi:id="{bid}" name="{name}" visibility="public">']
        for pname, ptype in props:
            lines += [
                f'  <ownedAttribute xmi:type="uml:Property" xmi:id="{self.ids()}" name="{pname}" visibility="private">',
                f'    <type xmi:idref="{self.types[ptype]}"/>',
                "  </ownedAttribute>",
            ]
        lines.append("</packagedElement>")
        self.elements.append(lines)
        return bid

    # -- activities --------------------------------------------------------

    def leaf(self, name, output, inputs, branches, default):
        """Decision-chain leaf: inputs flow into the first decision node, each
        decision either assigns the output under its guard or passes on via
        an else flow; the last one falls back to `default`."""
        act = Activity(self, name)
        act.initial()
        ins = [act.param(n, t) for n, t in inputs]
        out = act.param(output[0], output[1])
        if not branches:
            src = ins[0] if ins else None
            act.flow("object", src, out, name=f"{output[0]} := {default}")
            return act.finish()
        decisions = [act.decision(f"D{i + 1}") for i in range(len(branches))]
        act.control(act.initial_id, decisions[0])
        for p in ins:
            act.flow("object", p, decisions[0])
        for i, (guard, value) in enumerate(branches):
            act.flow("object", decisions[i], out, name=f"{output[0]} := {value}", guard=guard)
            if i + 1 < len(decisions):
                act.flow("object", decisions[i], decisions[i + 1], guard="else")
            else:
                act.flow("object", decisions[i], out, name=f"{output[0]} := {default}", guard="else")
        return act.finish()

    def package(self, name, build):
        outer, self.elements = self.elements, []
        build(self)
        inner, self.elements = self.elements, outer
        lines = [f'<packagedElement xmi:type="uml:Package" xmi:id="{self.ids()}" name="{name}" visibility="public">']
        for block in inner:
            lines += ["  " + l for l in block]
        lines.append("</packagedElement>")
        self.elements.append(lines)

    # -- output ------------------------------------------------------------

    def render(self):
        out = [
            '<?xml version="1.0" encoding="UTF-8"?>',
            '<xmi:XMI xmi:version="2.1" xmlns:uml="http://schema.omg.org/spec/UML/2.1" xmlns:xmi="http://schema.omg.org/spec/XMI/2.1">',
            '  <xmi:Documentation exporter="Enterprise Architect" exporterVersion="6.5"/>',
            f'  <uml:Model xmi:type="uml:Model" name="EA_Model" visibility="public">',
            f'    <packagedElement xmi:type="uml:Package" xmi:id="{self.ids()}" name="{self.name}" visibility="public">',
        ]
        for lines in self.elements:
            out += ["      " + l for l in lines]
        out += [
            "    </packagedElement>",
            "  </uml:Model>",
            "  <xmi:Extension extender=\"Enterprise Architect\" extenderID=\"6.5\">",
            "    <diagrams/>",
            "  </xmi:Extension>",
            "</xmi:XMI>",
            "",
        ]
        return "\n".join(out)


class Activity:
    def __init__(self, model, name):
        self.model = model
        self.id = model.ids()
        model.activities[name] = self.id
        self.name = name
        self.attrs = []
        self.nodes = []  # (id, lines-before-refs, lines-after-refs)
        self.refs = {}  # node or pin id -> [(kind, flow id)]
        self.edges = []
        self.initial_id = None

    def _node(self, kind, name, inner=(), extra=""):
        nid = self.model.ids()
        self.nodes.append((nid, kind, name, list(inner), extra))
        self.refs.setdefault(nid, [])
        return nid

    def initial(self):
        self.initial_id = self._node("uml:InitialNode", "ActivityInitial")
        return self.initial_id

    def final(self):
        return self._node("uml:ActivityFinalNode", "ActivityFinal")

    def decision(self, name):
        return self._node("uml:DecisionNode", name)

    def param(self, name, type_name):
        return self._node("uml:ActivityParameterNode", name,
                          [f'<type xmi:idref="{self.model.types[type_name]}"/>'])

    def attribute(self, name, type_name, default):
        aid = self.model.ids()
        self.attrs += [
            f'<ownedAttribute xmi:type="uml:Property" xmi:id="{aid}" name="{name}" visibility="private">',
            f'  <type xmi:idref="{self.model.types[type_name]}"/>',
            f'  <defaultValue xmi:type="uml:LiteralString" xmi:id="{self.model.ids()}" value="{default}"/>',
            "</ownedAttribute>",
        ]
        self.refs.setdefault(aid, [])
        return aid

    def call(self, name, behaviour, args, result):
        """args: [(pin name, type)]; result: (pin name, type). Returns
        (call id, {pin name: pin id}, result pin id)."""
        pins = {}
        pin_specs = []
        for pname, ptype in args:
            pid = self.model.ids()
            pins[pname] = pid
            pin_specs.append(("argument", "uml:InputPin", pid, pname, ptype))
        rid = self.model.ids()
        pin_specs.append(("result", "uml:OutputPin", rid, result[0], result[1]))
        for spec in pin_specs:
            self.refs.setdefault(spec[2], [])
        cid = self._node("uml:CallBehaviorAction", name, pin_specs,
                         extra=f' behavior="{self.model.activities[behaviour]}"')
        return cid, pins, rid

    def write(self, attribute, pin_name, pin_type):
        pid = self.model.ids()
        self.refs.setdefault(pid, [])
        wid = self._node("uml:AddStructuralFeatureValueAction", attribute,
                         [("value", "uml:InputPin", pid, pin_name, pin_type)])
        return wid, pid

    def flow(self, kind, source, target, name="", guard=""):
        fid = self.model.ids()
        self.edges.append((fid, kind, source, target, name, guard))
        self.refs.setdefault(source, []).append(("outgoing", fid))
        self.refs.setdefault(target, []).append(("incoming", fid))
        return fid

    def control(self, source, target):
        return self.flow("control", source, target)

    def _refs(self, eid, indent):
        return [f'{indent}<{k} xmi:idref="{f}"/>' for k, f in self.refs.get(eid, [])]

    def finish(self):
        m = self.model
        lines = [f'<packagedElement xmi:type="uml:Activity" xmi:id="{self.id}" name="{self.name}" visibility="public">']
        lines += ["  " + l for l in self.attrs]
        for nid, kind, name, inner, extra in self.nodes:
            head = f'  <node xmi:type="{kind}" xmi:id="{nid}" name="{name}" visibility="public"{extra}'
            body = []
            for item in inner:
                if isinstance(item, str):
                    body.append("    " + item)
                    continue
                tag, ptype, pid, pname, tname = item
                body += [
                    f'    <{tag} xmi:type="{ptype}" xmi:id="{pid}" name="{pname}" visibility="public">',
                    f'      <type xmi:idref="{m.types[tname]}"/>',
                    *self._refs(pid, "      "),
                    f"    </{tag}>",
                ]
            body += self._refs(nid, "    ")
            if body:
                lines += [head + ">", *body, "  </node>"]
            else:
                lines.append(head + "/>")
        for fid, kind, source, target, name, guard in self.edges:
            t = "uml:ObjectFlow" if kind == "object" else "uml:ControlFlow"
            named = f' name="{attr(name)}"' if name else ""
            head = f'  <edge xmi:type="{t}" xmi:id="{fid}"{named} visibility="public" source="{source}" target="{target}"'
            if guard:
                lines += [head + ">",
                          f'    <guard xmi:type="uml:LiteralString" xmi:id="{m.ids()}" value="{attr(guard)}"/>',
                          "  </edge>"]
            else:
                lines.append(head + "/>")
        lines.append("</packagedElement>")
        m.elements.append(lines)
        return self.id


# ---------------------------------------------------------------------------
# Shared type definitions.

def bdd_types(m, with_bedieningswijze=True):
    m.enum("eBepaaldheid", ["BEPAALD", "ONBEPAALD"])
    if with_bedieningswijze:
        m.enum("eBedieningswijze", ["AUTO", "HAND"])
    m.block("SetOpAutobediening", [("bepaaldheid4", "eBepaaldheid")])
    m.block("SetOpHandbediening", [("bepaaldheid5", "eBepaaldheid")])


def leaf_bedieningswijze(m):
    m.leaf(
        "Bedieningswijze",
        ("bedieningswijze2", "eBedieningswijze"),
        [("old_bedieningswijze2", "eBedieningswijze"),
         ("setOpAuto", "SetOpAutobediening"),
         ("setOpAuto2", "SetOpAutobediening"),
         ("setOpHand", "SetOpHandbediening")],
        [("setOpHand.bepaaldheid5 == BEPAALD", "HAND"),
         ("setOpAuto.bepaaldheid4 == BEPAALD || setOpAuto2.bepaaldheid4 == BEPAALD", "AUTO")],
        "old_bedieningswijze2",
    )


# Fields of the bedtk output block, with the glue value bound to each.
BEDTK_FIELDS = [
    ("autoStand", "eLinksRechtsUit", "new_stand2"),
    ("bedieningswijze", "eBedieningswijze", "new_bedieningswijze2"),
    ("beschikbaarheid", "eBeschikbaarheid", "beschikbaarheid3"),
    ("bestuurbaar", "eJaNee", "sp_tk2.bestuurbaar3"),
    ("disabled", "eJaNee", "disabled5"),
    ("enabled", "eJaNee", "new_enabled"),
    ("gevraagdeStand", "eLinksRechtsUit", "new_gevraagde_stand"),
    ("laatsteAutoStand", "eLinksRechtsUit", "new_stand2"),
    ("luikenGesloten", "eJaNee", "sp_tk2.luikenGesloten2"),
    ("observeerbaar", "eJaNee", "observeerbaar4"),
    ("redenNietBestuurbaarPlaatselijkeBediening", "eJaNee", "sp_tk2.redenNietBestuurbaarPlaatselijkeBediening3"),
    ("redenNietBestuurbaarStoring", "eJaNee", "sp_tk2.redenNietBestuurbaarStoring3"),
    ("stand", "eLinksRechtsUit", "sp_tk2.stand5"),
    ("statusMtkLuiken", "eOpenDicht", "statusMtkLuiken2"),
    ("storingAlgemeen", "eStoring", "sp_tk2.storingAlgemeen3"),
    ("storingCommunicatieUitgevallen", "eStoring", "sp_tk2.storingCommunicatieUitgevallen3"),
    ("storingInterneCommunicatie", "eStoring", "GEEN_STORING"),
    ("storingOverdrukregeling", "eStoring", "sp_tk2.storingOverdrukregeling2"),
    ("storingOverdrukventilatoren", "eStoring", "sp_tk2.storingOverdrukventilatoren2"),
    ("transitiestatus", "eTransitiestatus", "new_transitiestatus"),
]

# (leaf name, output, inputs, branches, default)
LEAVES = [
    ("StatusMtkLuiken", ("statusmtkluiken", "eOpenDicht"),
     [("sml_observeerbaar", "eJaNee"), ("sml_luikenGesloten", "eJaNee")],
     [("sml_observeerbaar == NEE", "ONBEKEND"), ("sml_luikenGesloten == JA", "DICHT")], "OPEN"),
    ("OudeGevraagdeStand", ("old_gevraagde_stand", "eLinksRechtsUit"),
     [("ogs_autoStand", "eLinksRechtsUit"), ("ogs_bedieningswijze", "eBedieningswijze"),
      ("ogs_handStand", "eLinksRechtsUit")],
     [("ogs_bedieningswijze == HAND", "ogs_handStand")], "ogs_autoStand"),
    ("Transitiestatus", ("transitiestatus", "eTransitiestatus"),
     [("ts_nieuweStand", "eLinksRechtsUit"), ("ts_oudeStand", "eLinksRechtsUit"),
      ("ts_status", "eTransitiestatus"), ("ts_stand", "eLinksRechtsUit")],
     [("ts_nieuweStand != ts_oudeStand", "IN_TRANSITIE"), ("ts_stand == ts_nieuweStand", "IN_RUST")],
     "ts_status"),
    ("Enabled", ("enabled2", "eJaNee"),
     [("en_disable", "eJaNee"), ("en_enable", "eJaNee"), ("en_oud", "eJaNee")],
     [("en_disable == JA", "NEE"), ("en_enable == JA", "JA")], "en_oud"),
    ("Disabled", ("disabled3", "eJaNee"),
     [("dis_enabled", "eJaNee")],
     [("dis_enabled == JA", "NEE")], "JA"),
    ("Beschikbaarheid", ("beschikbaarheid2", "eBeschikbaarheid"),
     [("bs_bestuurbaar", "eJaNee"), ("bs_faalstatus", "eFaalstatus"), ("bs_storingRegeling", "eStoring"),
      ("bs_storingVentilatoren", "eStoring"), ("bs_transitie", "eTransitiestatus")],
     [("bs_bestuurbaar == NEE || bs_faalstatus == GATEWAY_FAALT", "NIET_BESCHIKBAAR"),
      ("bs_storingRegeling != GEEN_STORING || bs_storingVentilatoren != GEEN_STORING", "BEPERKT_BESCHIKBAAR"),
      ("bs_transitie == IN_TRANSITIE", "BEPERKT_BESCHIKBAAR")],
     "BESCHIKBAAR"),
    ("Observeerbaar", ("observeerbaar2", "eJaNee"),
     [("ob_bestuurbaar", "eJaNee"), ("ob_faalstatus", "eFaalstatus"), ("ob_redenOpstart", "eJaNee"),
      ("ob_redenStoring", "eJaNee")],
     [("ob_faalstatus == GATEWAY_FAALT", "NEE"),
      ("!(ob_bestuurbaar == JA) && (ob_redenOpstart == JA || ob_redenStoring == JA)", "NEE")],
     "JA"),
    None,  # golden Bedieningswijze leaf, written first
    ("GevraagdeStand", ("gevraagde_stand", "eLinksRechtsUit"),
     [("gs_autoStand", "eLinksRechtsUit"), ("gs_bedieningswijze", "eBedieningswijze"),
      ("gs_handStand", "eLinksRechtsUit")],
     [("gs_bedieningswijze == AUTO", "gs_autoStand")], "gs_handStand"),
    ("SetStandBepalen", ("setstand", "SetStand"),
     [("ss_bestuurbaar", "eJaNee"), ("ss_enabled", "eJaNee"), ("ss_faalstatus", "eFaalstatus"),
      ("ss_gevraagd", "eLinksRechtsUit"), ("ss_stand", "eLinksRechtsUit")],
     [("ss_enabled == NEE || ss_bestuurbaar == NEE || ss_faalstatus == GATEWAY_FAALT", "GEEN_OPDRACHT"),
      ("ss_gevraagd == ss_stand", "GEEN_OPDRACHT"),
      ("ss_gevraagd == LINKS", "ZET_LINKS"),
      ("ss_gevraagd == RECHTS", "ZET_RECHTS")],
     "ZET_UIT"),
    ("AutoStand", ("auto_stand", "eLinksRechtsUit"),
     [("as_oud", "eLinksRechtsUit"), ("as_nieuw", "eLinksRechtsUit")],
     [("as_nieuw != UIT", "as_nieuw")], "as_oud"),
    ("HandStand", ("hand_stand", "eLinksRechtsUit"),
     [("hs_bedieningswijze", "eBedieningswijze"), ("hs_oud", "eLinksRechtsUit"), ("hs_nieuw", "eLinksRechtsUit")],
     [("hs_bedieningswijze == HAND && hs_nieuw != UIT", "hs_nieuw")], "hs_oud"),
]

# Calls of the glue, in document order: (leaf name, result pin, result type,
# argument per leaf input in order).
CALLS = [
    ("StatusMtkLuiken", "statusMtkLuiken2", "eOpenDicht", ["observeerbaar4", "sp_tk2.luikenGesloten2"]),
    ("OudeGevraagdeStand", "old_gevraagde_stand", "eLinksRechtsUit", ["auto_stand", "bedieningswijze4", "hand_stand"]),
    ("Transitiestatus", "new_transitiestatus", "eTransitiestatus",
     ["new_gevraagde_stand", "old_gevraagde_stand", "transitiestatus2", "sp_tk2.stand5"]),
    ("Enabled", "new_enabled", "eJaNee", ["bed_BF.disableOverdruk", "bed_BF.enableOverdruk", "enabled3"]),
    ("Disabled", "disabled5", "eJaNee", ["new_enabled"]),
    ("Beschikbaarheid", "beschikbaarheid3", "eBeschikbaarheid",
     ["sp_tk2.bestuurbaar3", "faalstatus2.faalstatusGateway", "sp_tk2.storingOverdrukregeling2",
      "sp_tk2.storingOverdrukventilatoren2", "new_transitiestatus"]),
    ("Observeerbaar", "observeerbaar4", "eJaNee",
     ["sp_tk2.bestuurbaar3", "faalstatus2.faalstatusGateway", "sp_tk2.redenNietBestuurbaarOpstart",
      "sp_tk2.redenNietBestuurbaarStoring3"]),
    ("Bedieningswijze", "new_bedieningswijze2", "eBedieningswijze",
     ["bedieningswijze4", "bed_BF.setOpAutobediening", "best_BF2.setOpAutobediening", "bed_BF.setOpHandbediening"]),
    ("GevraagdeStand", "new_gevraagde_stand", "eLinksRechtsUit", ["new_stand2", "new_bedieningswijze2", "new_stand3"]),
    ("SetStandBepalen", "setStand", "SetStand",
     ["sp_tk2.bestuurbaar3", "new_enabled", "faalstatus2.faalstatusGateway", "new_gevraagde_stand", "sp_tk2.stand5"]),
    ("AutoStand", "new_stand2", "eLinksRechtsUit", ["auto_stand", "best_BF2.setAutobedieningsStand"]),
    ("HandStand", "new_stand3", "eLinksRechtsUit", ["new_bedieningswijze2", "hand_stand", "bed_BF.setHandbedieningsStand"]),
]

ATTRIBUTES = [
    ("transitiestatus2", "eTransitiestatus", "IN_RUST"),
    ("hand_stand", "eLinksRechtsUit", "UIT"),
    ("enabled3", "eJaNee", "NEE"),
    ("bedieningswijze4", "eBedieningswijze", "AUTO"),
    ("auto_stand", "eLinksRechtsUit", "UIT"),
]

WRITES = [
    ("enabled3", "new_enabled"),
    ("bedieningswijze4", "new_bedieningswijze2"),
    ("transitiestatus2", "new_transitiestatus"),
    ("hand_stand", "new_stand3"),
    ("auto_stand", "new_stand2"),
]

INPUTS = [
    ("bed_BF", "bed_BF_Overdruk_Veilige_Ruimte"),
    ("sp_tk2", "besttk_BF_Overdruk_Veilige_Ruimte_SP_Overdruk_Veilige_Ruimte"),
    ("faalstatus2", "MonitoringIntegriteit3BBesturingssysteemVeiligeRuimte_FaalstatusGateway"),
    ("best_BF2", "best_Coordinatie_Luchtkwaliteit_Veilige_Ruimte"),
]

OUTPUTS = [
    ("bedtk_BF", "bedtk_BF_Overdruk_Veilige_Ruimte"),
    ("best_sp", "best_BF_Overdruk_Veilige_Ruimte_SP_Overdruk_Veilige_Ruimte"),
]


def overdruk_types(m):
    bdd_types(m)
    m.enum("eJaNee", ["JA", "NEE"])
    m.enum("eLinksRechtsUit", ["LINKS", "RECHTS", "UIT"])
    m.enum("eTransitiestatus", ["IN_RUST", "IN_TRANSITIE"])
    m.enum("eBeschikbaarheid", ["BESCHIKBAAR", "BEPERKT_BESCHIKBAAR", "NIET_BESCHIKBAAR"])
    m.enum("eOpenDicht", ["OPEN", "DICHT", "ONBEKEND"])
    m.enum("eStoring", ["GEEN_STORING", "STORING"])
    m.enum("eFaalstatus", ["GATEWAY_OK", "GATEWAY_FAALT"])
    m.enum("SetStand", ["ZET_LINKS", "ZET_RECHTS", "ZET_UIT", "GEEN_OPDRACHT"])
    m.block("best_Coordinatie_Luchtkwaliteit_Veilige_Ruimte",
            [("setOpAutobediening", "SetOpAutobediening"), ("setAutobedieningsStand", "eLinksRechtsUit")])
    m.block("MonitoringIntegriteit3BBesturingssysteemVeiligeRuimte_FaalstatusGateway",
            [("faalstatusGateway", "eFaalstatus")])
    m.block("bed_BF_Overdruk_Veilige_Ruimte",
            [("disableOverdruk", "eJaNee"), ("enableOverdruk", "eJaNee"),
             # emitted as setOpAutobediening2: the coordination block owns the plain name
             ("setOpAutobediening", "SetOpAutobediening"),
             ("setOpHandbediening", "SetOpHandbediening"),
             ("setHandbedieningsStand", "eLinksRechtsUit")])
    m.block("besttk_BF_Overdruk_Veilige_Ruimte_SP_Overdruk_Veilige_Ruimte",
            [("luikenGesloten2", "eJaNee"), ("stand5", "eLinksRechtsUit"), ("bestuurbaar3", "eJaNee"),
             ("storingOverdrukregeling2", "eStoring"), ("storingOverdrukventilatoren2", "eStoring"),
             ("redenNietBestuurbaarOpstart", "eJaNee"), ("redenNietBestuurbaarStoring3", "eJaNee"),
             ("redenNietBestuurbaarPlaatselijkeBediening3", "eJaNee"), ("storingAlgemeen3", "eStoring"),
             ("storingCommunicatieUitgevallen3", "eStoring")])
    m.block("bedtk_BF_Overdruk_Veilige_Ruimte", [(n, t) for n, t, _ in BEDTK_FIELDS])
    m.block("best_BF_Overdruk_Veilige_Ruimte_SP_Overdruk_Veilige_Ruimte", [("setStand", "SetStand")])


def overdruk_glue(m, leaf_inputs):
    g = Activity(m, "BF_Overdruk_Veilige_Ruimte")
    attrs = {n: g.attribute(n, t, d) for n, t, d in ATTRIBUTES}
    g.initial()
    params = {n: g.param(n, t) for n, t in INPUTS + OUTPUTS}
    results = {}
    calls = []
    for leaf, result, rtype, args in CALLS:
        ins = leaf_inputs[leaf]
        _, pins, rid = g.call(f"call_{leaf}", leaf, ins, (result, rtype))
        results[result] = rid
        calls.append((ins, pins, args))

    def source(value):
        head = value.split(".")[0]
        if head in params:
            return params[head]
        if head in attrs:
            return attrs[head]
        if head in results:
            return results[head]
        return params["sp_tk2"]  # enumeration constants travel with sp_tk2

    for ins, pins, args in calls:
        for (pname, _), value in zip(ins, args):
            g.flow("object", source(value), pins[pname], name=f"{pname} := {value}")
    for attribute, value in WRITES:
        wtype = next(t for n, t, _ in ATTRIBUTES if n == attribute)
        _, pid = g.write(attribute, "value", wtype)
        g.flow("object", source(value), pid, name=f"value := {value}")
    for field, _, value in BEDTK_FIELDS:
        g.flow("object", source(value), params["bedtk_BF"], name=f"bedtk_BF.{field} := {value}")
    g.flow("object", results["setStand"], params["best_sp"], name="best_sp.setStand := setStand")
    g.final()
    return g.finish()


def overdruk():
    m = Model("Overdruk_Veilige_Ruimte")
    m.package("ItemTypes", overdruk_types)
    leaf_bedieningswijze(m)
    leaf_inputs = {"Bedieningswijze": [("old_bedieningswijze2", "eBedieningswijze"),
                                       ("setOpAuto", "SetOpAutobediening"),
                                       ("setOpAuto2", "SetOpAutobediening"),
                                       ("setOpHand", "SetOpHandbediening")]}
    for spec in LEAVES:
        if spec is None:
            continue
        name, output, inputs, branches, default = spec
        m.leaf(name, output, inputs, branches, default)
        leaf_inputs[name] = inputs
    overdruk_glue(m, leaf_inputs)
    return m


def bdd():
    m = Model("ItemTypes")
    bdd_types(m, with_bedieningswijze=False)
    return m


def leaf_only():
    m = Model("Bedieningswijze")
    bdd_types(m)
    leaf_bedieningswijze(m)
    return m


def echo():
    """Glue with no calls and no attributes; needs --entry Echo."""
    m = Model("Echo")
    m.enum("eSignaal", ["AAN", "UIT"])
    a = Activity(m, "Echo")
    i = a.param("signaal_in", "eSignaal")
    o = a.param("signaal_uit", "eSignaal")
    a.flow("object", i, o, name="signaal_uit := signaal_in")
    a.finish()
    return m


def broken_enum():
    m = Model("BrokenEnum")
    m.enum("eBepaaldheid", ["BEPAALD", "ONBEPAALD", "BEPAALD"])
    m.block("SetOpAutobediening", [("bepaaldheid4", "eBepaaldheid")])
    return m


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "corpus"))
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for name, build in [("bdd", bdd), ("leaf_bedieningswijze", leaf_only), ("overdruk", overdruk),
                        ("echo", echo), ("broken_enum", broken_enum)]:
        (out / f"{name}.xmi").write_text(build().render(), encoding="utf-8")


if __name__ == "__main__":
    main()
