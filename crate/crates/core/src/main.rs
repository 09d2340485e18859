//! Command-line interface: single-point GDoF/bound/rate queries and
//! alpha-sweeps with CSV output.
//!
//! Exit codes: 0 on success, 1 on usage errors, 2 on domain or regime
//! errors (and I/O failures).

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use irc_gdof::{
    best_sum_rate, bound_report, example_allocation, gdof_irc, recover_exponents, run_sweep,
    weak_rates, write_csv, BestRate, FdfVariant, LinearChannel, PowerAllocation, RateBreakdown,
    StrengthExponents, SweepConfig,
};

#[derive(Parser)]
#[command(
    name = "irc-gdof",
    about = "GDoF, capacity bounds, and FDF rates of the symmetric Gaussian interference relay channel",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ChannelArgs {
    /// Direct gain h_d
    #[arg(long = "h-d")]
    h_d: f64,
    /// Cross (interference) gain h_c
    #[arg(long = "h-c")]
    h_c: f64,
    /// Relay-to-destination gain h_r
    #[arg(long = "h-r")]
    h_r: f64,
    /// Source-to-relay gain h_sr
    #[arg(long = "h-sr")]
    h_sr: f64,
    /// Per-node power budget P
    #[arg(long, short = 'P')]
    power: f64,
}

impl ChannelArgs {
    fn build(&self) -> Result<LinearChannel, irc_gdof::Error> {
        LinearChannel::new(self.h_d, self.h_c, self.h_r, self.h_sr, self.power)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form GDoF breakdown at one exponent triple
    Gdof {
        /// Interference exponent
        #[arg(long)]
        alpha: f64,
        /// Relay-to-destination exponent
        #[arg(long)]
        beta: f64,
        /// Source-to-relay exponent
        #[arg(long)]
        gamma: f64,
    },
    /// Sweep alpha and write the GDoF curves as CSV
    Sweep {
        #[arg(long)]
        beta: f64,
        #[arg(long)]
        gamma: f64,
        /// Grid start (defaults to gamma)
        #[arg(long)]
        alpha_min: Option<f64>,
        /// Grid end
        #[arg(long, default_value_t = 2.5)]
        alpha_max: f64,
        /// Number of grid points (defaults to 0.05 spacing)
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        steps: Option<u32>,
        /// Comma-separated SNR ladder for the numeric columns
        #[arg(long, value_delimiter = ',', default_value = "1e10,1e20,1e30")]
        snr_ladder: Vec<f64>,
        /// Cooperative-public level cap for the achievable-rate search
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..))]
        k_max: u32,
        /// Per-component grid resolution for the achievable-rate search
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(2..))]
        resolution: u32,
        /// Output CSV path
        #[arg(long)]
        out: PathBuf,
    },
    /// Finite-SNR sum-capacity upper bounds for one channel
    Bounds {
        #[command(flatten)]
        channel: ChannelArgs,
    },
    /// FDF achievable rates for one channel
    Achievable {
        #[command(flatten)]
        channel: ChannelArgs,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..))]
        k_max: u32,
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(2..))]
        resolution: u32,
        /// Evaluate the reference weak-interference allocation instead of
        /// searching (requires its regime)
        #[arg(long)]
        use_example_allocation: bool,
    },
}

enum AppError {
    Domain(irc_gdof::Error),
    Io(std::io::Error),
}

impl From<irc_gdof::Error> for AppError {
    fn from(e: irc_gdof::Error) -> Self {
        AppError::Domain(e)
    }
}

impl From<std::io::Error> for AppError {
    fn from(e: std::io::Error) -> Self {
        AppError::Io(e)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(AppError::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(AppError::Io(e)) => {
            eprintln!("i/o error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<(), AppError> {
    match command {
        Command::Gdof { alpha, beta, gamma } => {
            let breakdown = gdof_irc(StrengthExponents::new(alpha, beta, gamma)?)?;
            println!("alpha {alpha:.6}  beta {beta:.6}  gamma {gamma:.6}");
            let args: Vec<String> = breakdown.args.iter().map(|a| format!("{a:.6}")).collect();
            println!("args: {}", args.join(" "));
            println!("gdof: {:.6}", breakdown.value);
            println!("argmin: {}", breakdown.argmin_index);
            Ok(())
        }
        Command::Sweep {
            beta,
            gamma,
            alpha_min,
            alpha_max,
            steps,
            snr_ladder,
            k_max,
            resolution,
            out,
        } => {
            let alpha_min = alpha_min.unwrap_or(gamma);
            let steps = steps
                .map(|s| s as usize)
                .unwrap_or_else(|| irc_gdof::default_steps(alpha_min, alpha_max));
            let config = SweepConfig {
                beta,
                gamma,
                alpha_min,
                alpha_max,
                steps,
                ladder: snr_ladder,
                k_max: k_max as usize,
                resolution: resolution as usize,
            };
            let rows = run_sweep(&config)?;
            let mut writer = BufWriter::new(File::create(&out)?);
            write_csv(&rows, &mut writer)?;
            writer.flush()?;
            println!("wrote {} rows to {}", rows.len(), out.display());
            Ok(())
        }
        Command::Bounds { channel } => {
            let ch = channel.build()?;
            // The standalone genie bounds gate degenerate channels; compute
            // them first so those errors surface before any output.
            let genie_1 = irc_gdof::genie_bound_1(&ch)?;
            let genie_2 = irc_gdof::genie_bound_2(&ch)?;
            let report = bound_report(&ch);
            println!("cutset_bc:  {:.6} bits", report.cutset_bc);
            println!("cutset_mac: {:.6} bits", report.cutset_mac);
            println!("genie_1:    {genie_1:.6} bits");
            println!("genie_2:    {genie_2:.6} bits");
            println!(
                "tightest:   {:.6} bits ({})",
                report.tightest,
                report.tightest_name.name()
            );
            Ok(())
        }
        Command::Achievable {
            channel,
            k_max,
            resolution,
            use_example_allocation,
        } => {
            let ch = channel.build()?;
            let best = if use_example_allocation {
                let allocation = example_allocation(&ch)?;
                let rates = weak_rates(&ch, &allocation)?;
                BestRate {
                    rates,
                    allocation,
                    variant: FdfVariant::Weak,
                }
            } else {
                best_sum_rate(&ch, k_max as usize, resolution as usize)?
            };
            print_rates(&ch, &best);
            Ok(())
        }
    }
}

fn print_rates(ch: &LinearChannel, best: &BestRate) {
    let variant = match best.variant {
        FdfVariant::Weak => "weak",
        FdfVariant::Strong => "strong",
    };
    println!("variant: {variant}");
    print_allocation(&best.allocation);
    print_breakdown(&best.rates);
    // Normalized readout only when the direct link can normalize it.
    if ch.snr_d() > 1.0 {
        let normalized = best.rates.sum_rate / (0.5 * ch.snr_d().log2());
        println!("normalized: {normalized:.6}");
        if let Ok(e) = recover_exponents(ch) {
            println!(
                "exponents: alpha {:.6}  beta {:.6}  gamma {:.6}",
                e.alpha(),
                e.beta(),
                e.gamma()
            );
        }
    }
}

fn print_allocation(alloc: &PowerAllocation) {
    println!("p_private: {:.6e}", alloc.p_private);
    println!("p_common:  {:.6e}", alloc.p_common);
    for (i, p) in alloc.p_cp.iter().enumerate() {
        println!("p_cp[{}]:   {:.6e}", i + 1, p);
    }
    println!("p_relay_1: {:.6e}", alloc.p_relay_1);
    println!("p_relay_2: {:.6e}", alloc.p_relay_2);
}

fn print_breakdown(rates: &RateBreakdown) {
    use irc_gdof::{CommonBinding, CpLevelBinding, CpTotalBinding};
    println!("r_private: {:.6} bits", rates.r_private);
    let common_tag = match rates.binding_constraints.common {
        CommonBinding::Individual => "individual",
        CommonBinding::Sum => "sum",
    };
    println!("r_common:  {:.6} bits ({common_tag})", rates.r_common);
    for (i, (r, tag)) in rates
        .r_cp_levels
        .iter()
        .zip(&rates.binding_constraints.cp_levels)
        .enumerate()
    {
        let tag = match tag {
            CpLevelBinding::Relay => "relay",
            CpLevelBinding::Destination => "destination",
        };
        println!("r_cp[{}]:   {r:.6} bits ({tag})", i + 1);
    }
    let total_tag = match rates.binding_constraints.cp_total {
        CpTotalBinding::LevelSum => "level-sum",
        CpTotalBinding::RelayForward => "relay-forward",
    };
    println!("r_cp_total: {:.6} bits ({total_tag})", rates.r_cp_total);
    println!("sum_rate:  {:.6} bits", rates.sum_rate);
}
