use netphys::ensembles::{barabasi_albert, erdos_renyi, watts_strogatz, BaVariant};
use netphys::io::EdgeListDocument;

use crate::args::{BaVariantArg, Common, GenerateModel};
use crate::error::CliResult;

/// Edge list with a provenance header naming the generator, its
/// parameters and the seed.
pub fn run(common: &Common, model: &GenerateModel) -> CliResult<String> {
    let seed = common.seed;
    let (g, provenance) = match *model {
        GenerateModel::Er { n, p } => (erdos_renyi(n, p, seed)?, format!("er n={n} p={p} seed={seed}")),
        GenerateModel::Ws { n, k, p } => (watts_strogatz(n, k, p, seed)?, format!("ws n={n} k={k} p={p} seed={seed}")),
        GenerateModel::Ba { n, d, variant } => {
            let (variant, name) = match variant {
                BaVariantArg::Growth => (BaVariant::Growth, "growth"),
                BaVariantArg::Lcd => (BaVariant::BollobasRiordan { simplify: false }, "lcd"),
                BaVariantArg::LcdSimple => (BaVariant::BollobasRiordan { simplify: true }, "lcd-simple"),
            };
            (barabasi_albert(n, d, seed, variant)?, format!("ba n={n} d={d} variant={name} seed={seed}"))
        }
    };
    Ok(EdgeListDocument::from_graph(&g, Some(format!("netphys generate {provenance}"))).to_string())
}
