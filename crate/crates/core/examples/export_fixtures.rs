//! Writes the catalog algebras, their adjoint representations and a zero
//! operator as JSON documents into the directory given on the command line.

use std::path::PathBuf;

use homlie::fixtures;
use homlie::io::{to_json_pretty, AlgebraDoc, AlgebraRef, LinearOpDoc, RepresentationDoc};
use homlie::structures::adjoint_rep;
use homlie::Matrix;

fn main() -> std::io::Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "data".into()));
    std::fs::create_dir_all(&dir)?;
    for (name, g) in fixtures::catalog() {
        let algebra_file = format!("{name}.json");
        std::fs::write(
            dir.join(&algebra_file),
            to_json_pretty(&AlgebraDoc::from_algebra(&g)) + "\n",
        )?;
        let mut rep = RepresentationDoc::from_representation(&adjoint_rep(&g, 0));
        rep.algebra = AlgebraRef::Path(algebra_file);
        std::fs::write(
            dir.join(format!("{name}-adj.json")),
            to_json_pretty(&rep) + "\n",
        )?;
        let zero = LinearOpDoc::from_matrix(&Matrix::zeros(g.dim(), g.dim()));
        std::fs::write(
            dir.join(format!("{name}-zero.json")),
            to_json_pretty(&zero) + "\n",
        )?;
    }
    Ok(())
}
