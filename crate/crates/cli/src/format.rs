//! The JSON structure file: named groups, homs, actions and tables, plus one
//! top-level structure whose `refs` point at those names.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use threetypes_core::crossed::{
    Cat1Group, Cat2Group, CrossedModule, CrossedSquare, QuadraticModule, TwoCrossedModule,
};
use threetypes_core::group::builtin::{cyclic, dihedral, klein4, quaternion8, symmetric};
use threetypes_core::group::{make_action, make_group, make_hom};
use threetypes_core::simplicial::{TruncatedBisimplicialGroup, TruncatedSimplicialGroup};
use threetypes_core::{Action, Group, Hom};

use crate::error::{CliError, CliResult};

pub const KINDS: [&str; 8] = [
    "crossed_module",
    "crossed_square",
    "two_crossed",
    "quadratic",
    "cat1",
    "cat2",
    "simplicial",
    "bisimplicial",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupSpec {
    Builtin {
        builtin: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        n: Option<usize>,
    },
    Table {
        table: Vec<Vec<usize>>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomSpec {
    pub from: String,
    pub to: String,
    pub map: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionSpec {
    pub actor: String,
    pub target: String,
    /// `table[g][x]` is the action of `g` on `x`.
    pub table: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureSpec {
    pub kind: String,
    pub refs: BTreeMap<String, Value>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureFile {
    #[serde(default)]
    pub groups: BTreeMap<String, GroupSpec>,
    #[serde(default)]
    pub homs: BTreeMap<String, HomSpec>,
    #[serde(default)]
    pub actions: BTreeMap<String, ActionSpec>,
    #[serde(default)]
    pub tables: BTreeMap<String, Vec<Vec<usize>>>,
    pub structure: StructureSpec,
}

/// A loaded structure of any kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Structure {
    CrossedModule(CrossedModule),
    CrossedSquare(CrossedSquare),
    TwoCrossed(TwoCrossedModule),
    Quadratic(QuadraticModule),
    Cat1(Cat1Group),
    Cat2(Cat2Group),
    Simplicial(TruncatedSimplicialGroup),
    Bisimplicial(TruncatedBisimplicialGroup),
}

impl Structure {
    pub fn kind(&self) -> &'static str {
        match self {
            Structure::CrossedModule(_) => "crossed_module",
            Structure::CrossedSquare(_) => "crossed_square",
            Structure::TwoCrossed(_) => "two_crossed",
            Structure::Quadratic(_) => "quadratic",
            Structure::Cat1(_) => "cat1",
            Structure::Cat2(_) => "cat2",
            Structure::Simplicial(_) => "simplicial",
            Structure::Bisimplicial(_) => "bisimplicial",
        }
    }
}

pub fn builtin_group(name: &str, n: Option<usize>) -> Result<Group, String> {
    let need = |n: Option<usize>| n.ok_or_else(|| format!("builtin '{name}' needs n"));
    Ok(match name {
        "cyclic" => {
            let n = need(n)?;
            if n == 0 {
                return Err("cyclic needs n >= 1".into());
            }
            cyclic(n)
        }
        "dihedral" => {
            let n = need(n)?;
            if n < 1 {
                return Err("dihedral needs n >= 1".into());
            }
            dihedral(n)
        }
        "symmetric" => {
            let n = need(n)?;
            if !(1..=5).contains(&n) {
                return Err("symmetric needs 1 <= n <= 5".into());
            }
            symmetric(n)
        }
        "quaternion8" => quaternion8(),
        "klein4" => klein4(),
        other => return Err(format!("unknown builtin '{other}'")),
    })
}

pub fn parse_file(text: &str) -> CliResult<StructureFile> {
    if text.trim().is_empty() {
        return Err(CliError::parse("line 1", "empty file"));
    }
    serde_json::from_str(text)
        .map_err(|e| CliError::parse(format!("line {}, column {}", e.line(), e.column()), e))
}

/// Resolves names and builds the structure. Shape errors name the field.
pub fn load(file: &StructureFile) -> CliResult<Structure> {
    Resolver::new(file)?.structure()
}

struct Resolver<'a> {
    file: &'a StructureFile,
    groups: BTreeMap<&'a str, Group>,
}

impl<'a> Resolver<'a> {
    fn new(file: &'a StructureFile) -> CliResult<Resolver<'a>> {
        let mut groups = BTreeMap::new();
        for (name, spec) in &file.groups {
            let locus = format!("groups.{name}");
            let g = match spec {
                GroupSpec::Builtin { builtin, n } => {
                    builtin_group(builtin, *n).map_err(|e| CliError::parse(&locus, e))?
                }
                GroupSpec::Table { table } => {
                    make_group(table).map_err(|e| CliError::parse(&locus, e))?
                }
            };
            groups.insert(name.as_str(), g);
        }
        Ok(Resolver { file, groups })
    }

    fn group_named(&self, name: &str, locus: &str) -> CliResult<Group> {
        self.groups
            .get(name)
            .cloned()
            .ok_or_else(|| CliError::parse(locus, format!("unknown group '{name}'")))
    }

    fn name(&self, role: &str) -> CliResult<&'a str> {
        let locus = format!("structure.refs.{role}");
        match self.file.structure.refs.get(role) {
            Some(Value::String(s)) => Ok(s),
            Some(_) => Err(CliError::parse(locus, "expected a name")),
            None => Err(CliError::parse(locus, "missing")),
        }
    }

    fn hom_named(&self, name: &str, locus: &str) -> CliResult<Hom> {
        let spec = self
            .file
            .homs
            .get(name)
            .ok_or_else(|| CliError::parse(locus, format!("unknown hom '{name}'")))?;
        let at = format!("homs.{name}");
        let dom = self.group_named(&spec.from, &format!("{at}.from"))?;
        let cod = self.group_named(&spec.to, &format!("{at}.to"))?;
        make_hom(&dom, &cod, spec.map.clone()).map_err(|e| CliError::parse(at, e))
    }

    fn group(&self, role: &str) -> CliResult<Group> {
        self.group_named(self.name(role)?, &format!("structure.refs.{role}"))
    }

    fn hom(&self, role: &str) -> CliResult<Hom> {
        self.hom_named(self.name(role)?, &format!("structure.refs.{role}"))
    }

    fn action(&self, role: &str) -> CliResult<Action> {
        let name = self.name(role)?;
        let spec = self.file.actions.get(name).ok_or_else(|| {
            CliError::parse(format!("structure.refs.{role}"), format!("unknown action '{name}'"))
        })?;
        let at = format!("actions.{name}");
        let actor = self.group_named(&spec.actor, &format!("{at}.actor"))?;
        let target = self.group_named(&spec.target, &format!("{at}.target"))?;
        make_action(&actor, &target, &spec.table).map_err(|e| CliError::parse(at, e))
    }

    fn table(&self, role: &str) -> CliResult<&'a Vec<Vec<usize>>> {
        let name = self.name(role)?;
        self.file.tables.get(name).ok_or_else(|| {
            CliError::parse(format!("structure.refs.{role}"), format!("unknown table '{name}'"))
        })
    }

    /// A JSON array of names, or of arrays of names.
    fn names(value: &Value, locus: &str) -> CliResult<Vec<String>> {
        value
            .as_array()
            .ok_or_else(|| CliError::parse(locus, "expected an array of names"))?
            .iter()
            .map(|v| {
                v.as_str()
                    .map(str::to_string)
                    .ok_or_else(|| CliError::parse(locus, "expected a name"))
            })
            .collect()
    }

    fn name_rows(&self, role: &str) -> CliResult<Vec<Vec<String>>> {
        let locus = format!("structure.refs.{role}");
        let v = self
            .file
            .structure
            .refs
            .get(role)
            .ok_or_else(|| CliError::parse(&locus, "missing"))?;
        v.as_array()
            .ok_or_else(|| CliError::parse(&locus, "expected an array of arrays"))?
            .iter()
            .enumerate()
            .map(|(i, row)| Self::names(row, &format!("{locus}[{i}]")))
            .collect()
    }

    fn hom_rows(&self, role: &str) -> CliResult<Vec<Vec<Hom>>> {
        self.name_rows(role)?
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .map(|n| self.hom_named(n, &format!("structure.refs.{role}[{i}]")))
                    .collect()
            })
            .collect()
    }

    fn structure(&self) -> CliResult<Structure> {
        let kind = self.file.structure.kind.as_str();
        let shape = |e: threetypes_core::Error| CliError::parse("structure", e);
        Ok(match kind {
            "crossed_module" => Structure::CrossedModule(
                CrossedModule::new(self.hom("boundary")?, self.action("action")?).map_err(shape)?,
            ),
            "crossed_square" => Structure::CrossedSquare(
                CrossedSquare::new(
                    self.hom("lambda")?,
                    self.hom("lambda_prime")?,
                    self.hom("mu")?,
                    self.hom("nu")?,
                    self.action("act_l")?,
                    self.action("act_m")?,
                    self.action("act_n")?,
                    self.table("h")?,
                )
                .map_err(shape)?,
            ),
            "two_crossed" => Structure::TwoCrossed(
                TwoCrossedModule::new(
                    self.hom("d2")?,
                    self.hom("d1")?,
                    self.action("act_m")?,
                    self.action("act_l")?,
                    self.table("lifting")?,
                )
                .map_err(shape)?,
            ),
            "quadratic" => Structure::Quadratic(
                QuadraticModule::new(
                    self.hom("delta")?,
                    self.hom("boundary")?,
                    self.action("act_m")?,
                    self.action("act_l")?,
                    self.table("omega")?,
                )
                .map_err(shape)?,
            ),
            "cat1" => {
                let (g, s, t) = (self.group("group")?, self.hom("s")?, self.hom("t")?);
                endo_check(&g, &[&s, &t])?;
                Structure::Cat1(Cat1Group { g, s, t })
            }
            "cat2" => {
                let g = self.group("group")?;
                let (s1, t1, s2, t2) = (self.hom("s1")?, self.hom("t1")?, self.hom("s2")?, self.hom("t2")?);
                endo_check(&g, &[&s1, &t1, &s2, &t2])?;
                Structure::Cat2(Cat2Group { g, s1, t1, s2, t2 })
            }
            "simplicial" => {
                let levels = self
                    .file
                    .structure
                    .refs
                    .get("levels")
                    .ok_or_else(|| CliError::parse("structure.refs.levels", "missing"))?;
                let levels = Self::names(levels, "structure.refs.levels")?
                    .iter()
                    .map(|n| self.group_named(n, "structure.refs.levels"))
                    .collect::<CliResult<Vec<_>>>()?;
                let faces = self.hom_rows("faces")?;
                let degens = self.hom_rows("degeneracies")?;
                Structure::Simplicial(
                    TruncatedSimplicialGroup::new(levels, faces, degens).map_err(shape)?,
                )
            }
            "bisimplicial" => Structure::Bisimplicial(self.bisimplicial()?),
            other => {
                return Err(CliError::parse(
                    "structure.kind",
                    format!("unknown kind '{other}'; expected one of {}", KINDS.join(", ")),
                ))
            }
        })
    }

    /// `refs.cells` is a list of `{p, q, group, dh, sh, dv, sv}` objects.
    fn bisimplicial(&self) -> CliResult<TruncatedBisimplicialGroup> {
        let locus = "structure.refs.cells";
        let cells = self
            .file
            .structure
            .refs
            .get("cells")
            .and_then(Value::as_array)
            .ok_or_else(|| CliError::parse(locus, "expected an array of cells"))?;
        let mut groups = BTreeMap::new();
        let mut maps: [BTreeMap<(usize, usize), Vec<Hom>>; 4] = Default::default();
        let mut depth = 0;
        for (i, cell) in cells.iter().enumerate() {
            let at = format!("{locus}[{i}]");
            let coord = |k: &str| {
                cell.get(k)
                    .and_then(Value::as_u64)
                    .map(|v| v as usize)
                    .ok_or_else(|| CliError::parse(format!("{at}.{k}"), "expected an integer"))
            };
            let (p, q) = (coord("p")?, coord("q")?);
            depth = depth.max(p + q);
            let gname = cell
                .get("group")
                .and_then(Value::as_str)
                .ok_or_else(|| CliError::parse(format!("{at}.group"), "expected a name"))?;
            groups.insert((p, q), self.group_named(gname, &format!("{at}.group"))?);
            for (slot, key) in ["dh", "sh", "dv", "sv"].iter().enumerate() {
                if let Some(v) = cell.get(*key) {
                    let hl = format!("{at}.{key}");
                    let homs = Self::names(v, &hl)?
                        .iter()
                        .map(|n| self.hom_named(n, &hl))
                        .collect::<CliResult<Vec<_>>>()?;
                    maps[slot].insert((p, q), homs);
                }
            }
        }
        let [hf, hd, vf, vd] = maps;
        TruncatedBisimplicialGroup::new(depth, groups, hf, hd, vf, vd)
            .map_err(|e| CliError::parse("structure", e))
    }
}

fn endo_check(g: &Group, maps: &[&Hom]) -> CliResult<()> {
    for h in maps {
        if h.dom() != g || h.cod() != g {
            return Err(CliError::parse("structure", "source and target maps must be endomorphisms of the group"));
        }
    }
    Ok(())
}

/// Collects named pieces while serializing.
#[derive(Default)]
struct Writer {
    file: StructureFileParts,
}

#[derive(Default)]
struct StructureFileParts {
    groups: BTreeMap<String, GroupSpec>,
    homs: BTreeMap<String, HomSpec>,
    actions: BTreeMap<String, ActionSpec>,
    tables: BTreeMap<String, Vec<Vec<usize>>>,
    refs: BTreeMap<String, Value>,
}

impl Writer {
    fn group(&mut self, name: &str, g: &Group) -> String {
        self.file.groups.insert(name.into(), GroupSpec::Table { table: g.table() });
        name.into()
    }

    fn group_ref(&mut self, role: &str, name: &str, g: &Group) {
        let n = self.group(name, g);
        self.file.refs.insert(role.into(), json!(n));
    }

    fn hom(&mut self, name: &str, (from, to): (&str, &str), h: &Hom) -> String {
        let spec = HomSpec {
            from: from.into(),
            to: to.into(),
            map: h.map(),
        };
        self.file.homs.insert(name.into(), spec);
        name.into()
    }

    fn hom_ref(&mut self, role: &str, ends: (&str, &str), h: &Hom) {
        let n = self.hom(role, ends, h);
        self.file.refs.insert(role.into(), json!(n));
    }

    fn action_ref(&mut self, role: &str, (actor, target): (&str, &str), a: &Action) {
        let name = format!("{actor}_on_{target}");
        let spec = ActionSpec {
            actor: actor.into(),
            target: target.into(),
            table: a.table(),
        };
        self.file.actions.insert(name.clone(), spec);
        self.file.refs.insert(role.into(), json!(name));
    }

    fn table_ref(&mut self, role: &str, t: Vec<Vec<usize>>) {
        self.file.tables.insert(role.into(), t);
        self.file.refs.insert(role.into(), json!(role));
    }

    fn finish(self, kind: &str) -> StructureFile {
        let p = self.file;
        StructureFile {
            groups: p.groups,
            homs: p.homs,
            actions: p.actions,
            tables: p.tables,
            structure: StructureSpec {
                kind: kind.into(),
                refs: p.refs,
            },
        }
    }
}

/// Writes every group as a full table under a name fixed by its role.
pub fn serialize(s: &Structure) -> StructureFile {
    let mut w = Writer::default();
    match s {
        Structure::CrossedModule(x) => {
            w.group("M", x.m());
            w.group("N", x.n());
            w.hom_ref("boundary", ("M", "N"), &x.boundary);
            w.action_ref("action", ("N", "M"), &x.act);
        }
        Structure::CrossedSquare(x) => {
            for (n, g) in [("L", x.l()), ("M", x.m()), ("N", x.n()), ("P", x.p())] {
                w.group(n, g);
            }
            w.hom_ref("lambda", ("L", "M"), &x.lam);
            w.hom_ref("lambda_prime", ("L", "N"), &x.lamp);
            w.hom_ref("mu", ("M", "P"), &x.mu);
            w.hom_ref("nu", ("N", "P"), &x.nu);
            w.action_ref("act_l", ("P", "L"), &x.act_l);
            w.action_ref("act_m", ("P", "M"), &x.act_m);
            w.action_ref("act_n", ("P", "N"), &x.act_n);
            w.table_ref("h", x.h_table());
        }
        Structure::TwoCrossed(x) => {
            for (n, g) in [("C2", x.l()), ("C1", x.m()), ("C0", x.n())] {
                w.group(n, g);
            }
            w.hom_ref("d2", ("C2", "C1"), &x.d2);
            w.hom_ref("d1", ("C1", "C0"), &x.d1);
            w.action_ref("act_m", ("C0", "C1"), &x.act_m);
            w.action_ref("act_l", ("C0", "C2"), &x.act_l);
            w.table_ref("lifting", x.lifting_table());
        }
        Structure::Quadratic(x) => {
            for (n, g) in [("L", x.l()), ("M", x.m()), ("N", x.n())] {
                w.group(n, g);
            }
            w.hom_ref("delta", ("L", "M"), &x.delta);
            w.hom_ref("boundary", ("M", "N"), &x.boundary);
            w.action_ref("act_m", ("N", "M"), &x.act_m);
            w.action_ref("act_l", ("N", "L"), &x.act_l);
            w.table_ref("omega", x.omega_table());
        }
        Structure::Cat1(k) => {
            w.group_ref("group", "G", &k.g);
            w.hom_ref("s", ("G", "G"), &k.s);
            w.hom_ref("t", ("G", "G"), &k.t);
        }
        Structure::Cat2(k) => {
            w.group_ref("group", "G", &k.g);
            for (role, h) in [("s1", &k.s1), ("t1", &k.t1), ("s2", &k.s2), ("t2", &k.t2)] {
                w.hom_ref(role, ("G", "G"), h);
            }
        }
        Structure::Simplicial(g) => {
            let lv = |n: usize| format!("G{n}");
            let levels: Vec<String> = (0..=g.depth()).map(|n| w.group(&lv(n), g.level(n))).collect();
            let mut faces = vec![Vec::new()];
            for n in 1..=g.depth() {
                let ends = (lv(n), lv(n - 1));
                faces.push(
                    (0..=n)
                        .map(|i| w.hom(&format!("d{n}_{i}"), (&ends.0, &ends.1), g.d(n, i)))
                        .collect::<Vec<_>>(),
                );
            }
            let mut degens = Vec::new();
            for n in 0..g.depth() {
                let ends = (lv(n), lv(n + 1));
                degens.push(
                    (0..=n)
                        .map(|i| w.hom(&format!("s{n}_{i}"), (&ends.0, &ends.1), g.s(n, i)))
                        .collect::<Vec<_>>(),
                );
            }
            w.file.refs.insert("levels".into(), json!(levels));
            w.file.refs.insert("faces".into(), json!(faces));
            w.file.refs.insert("degeneracies".into(), json!(degens));
        }
        Structure::Bisimplicial(b) => {
            let k = b.depth();
            let gname = |p: usize, q: usize| format!("G{p}_{q}");
            let mut cells = Vec::new();
            for p in 0..=k {
                for q in 0..=k - p {
                    w.group(&gname(p, q), b.group(p, q));
                }
            }
            for p in 0..=k {
                for q in 0..=k - p {
                    let here = gname(p, q);
                    let mut cell = json!({"p": p, "q": q, "group": here});
                    let families: [(&str, bool, usize, (usize, usize)); 4] = [
                        ("dh", p >= 1, p + 1, (p.wrapping_sub(1), q)),
                        ("dv", q >= 1, q + 1, (p, q.wrapping_sub(1))),
                        ("sh", p + q < k, p + 1, (p + 1, q)),
                        ("sv", p + q < k, q + 1, (p, q + 1)),
                    ];
                    for (key, present, count, (tp, tq)) in families {
                        if !present {
                            continue;
                        }
                        let there = gname(tp, tq);
                        let names: Vec<String> = (0..count)
                            .map(|i| {
                                let h = match key {
                                    "dh" => b.dh(p, q, i),
                                    "dv" => b.dv(p, q, i),
                                    "sh" => b.sh(p, q, i),
                                    _ => b.sv(p, q, i),
                                };
                                w.hom(&format!("{key}{p}_{q}_{i}"), (&here, &there), h)
                            })
                            .collect();
                        cell[key] = json!(names);
                    }
                    cells.push(cell);
                }
            }
            w.file.refs.insert("cells".into(), json!(cells));
        }
    }
    w.finish(s.kind())
}

pub fn to_json(f: &StructureFile) -> String {
    serde_json::to_string_pretty(f).expect("plain data serializes")
}
