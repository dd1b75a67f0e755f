//! Deterministic TSV reports: named sections with a fixed column order,
//! LF line endings, and stable row ordering supplied by the callers.

#[derive(Debug, Clone)]
pub struct Section {
    pub name: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
    /// Free-form annotations rendered as `# note: …` lines after the rows.
    pub notes: Vec<String>,
}

impl Section {
    pub fn new(name: &str, columns: &[&str]) -> Section {
        Section {
            name: name.to_string(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn push_row(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn note(&mut self, text: &str) {
        self.notes.push(text.to_string());
    }
}

/// Renders sections to a single TSV document. An empty section renders its
/// header line only.
pub fn render(sections: &[Section]) -> String {
    let mut out = String::new();
    for (i, s) in sections.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        out.push_str(&format!("# {}\n", s.name));
        out.push_str(&s.columns.join("\t"));
        out.push('\n');
        for row in &s.rows {
            out.push_str(&row.join("\t"));
            out.push('\n');
        }
        for n in &s.notes {
            out.push_str(&format!("# note: {n}\n"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_section_is_header_only() {
        let s = Section::new("empty", &["a", "b"]);
        assert_eq!(render(&[s]), "# empty\na\tb\n");
    }

    #[test]
    fn rendering_is_deterministic() {
        let mut s = Section::new("x", &["k", "v"]);
        s.push_row(vec!["1".into(), "2".into()]);
        s.note("hello");
        let doc1 = render(&[s.clone()]);
        let doc2 = render(&[s]);
        assert_eq!(doc1, doc2);
        assert_eq!(doc1, "# x\nk\tv\n1\t2\n# note: hello\n");
    }
}
