use serde_json::{json, Value};

use super::CharacterTable;

/// CSV with a header of class representatives; one row per character.
pub fn table_to_csv(table: &CharacterTable) -> String {
    let cls = table.classes();
    let parent = cls.parent();
    let mut out = String::from("character");
    for c in 0..cls.num_classes() {
        out.push(',');
        out.push_str(&csv_field(&parent.element_label(cls.rep(c))));
    }
    out.push('\n');
    for (i, chi) in table.characters().iter().enumerate() {
        out.push_str(&i.to_string());
        for v in chi.values() {
            out.push(',');
            out.push_str(&csv_field(&v.to_string()));
        }
        out.push('\n');
    }
    out
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn table_to_json(table: &CharacterTable) -> Value {
    let cls = table.classes();
    let parent = cls.parent();
    let classes: Vec<Value> = (0..cls.num_classes())
        .map(|c| {
            json!({
                "representative": cls.rep(c),
                "label": parent.element_label(cls.rep(c)),
                "size": cls.classes()[c].len(),
            })
        })
        .collect();
    let characters: Vec<Value> = table
        .characters()
        .iter()
        .map(|chi| json!(chi.values().iter().map(ToString::to_string).collect::<Vec<_>>()))
        .collect();
    json!({
        "order": cls.order(),
        "conductor": table.conductor(),
        "prime": table.prime(),
        "classes": classes,
        "characters": characters,
    })
}
