/// Left-aligned plain-text table. An empty header slice prints rows only.
pub fn table(headers: &[&str], rows: Vec<Vec<String>>) -> String {
    let ncols = rows
        .iter()
        .map(Vec::len)
        .chain([headers.len()])
        .max()
        .unwrap_or(0);
    let mut widths = vec![0; ncols];
    let header_row: Vec<String> = headers.iter().map(|h| h.to_string()).collect();
    for row in rows.iter().chain(std::iter::once(&header_row)) {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |row: &[String]| {
        let cells: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        format!("{}\n", cells.join("  ").trim_end())
    };
    let mut out = String::new();
    if !headers.is_empty() {
        out.push_str(&line(&header_row));
        let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
        out.push_str(&line(&rule));
    }
    for row in &rows {
        out.push_str(&line(row));
    }
    out
}
