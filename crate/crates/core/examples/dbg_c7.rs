use stiefel_landing::landing::*;
use stiefel_landing::problems::*;
use stiefel_landing::*;
fn main() {
    for beta_v in [0.5f64, 1.0] {
        let mut good = 0;
        let mut feasible_fail = 0;
        for seed in 0..20u64 {
            let inst = random_instance::<f64>(ProblemKind::Rayleigh, 20, 5, seed, 0.5).unwrap();
            let mut config = LandingConfig::new(Beta64::new(beta_v).unwrap());
            config.step_policy = StepPolicy::Fixed { eta: Some(0.2) };
            let result = solve(&inst.objective, &inst.x0, &config).unwrap();
            let f = inst.objective.eval(result.final_point.matrix());
            let gap = (f - inst.optimum_oracle.unwrap()).abs();
            let h = result.final_record().h_norm;
            if gap <= 1e-6 {
                good += 1;
            } else if h <= 1e-8 {
                feasible_fail += 1;
                println!("beta {beta_v} seed {seed}: saddle stall, gap {gap:.2e}, h {h:.2e}, {:?}", result.status);
            } else {
                println!("beta {beta_v} seed {seed}: BAD h {h:.2e} gap {gap:.2e} {:?}", result.status);
            }
        }
        println!("beta {beta_v}: {good}/20 reached optimum, {feasible_fail} feasible stalls");
    }
}
