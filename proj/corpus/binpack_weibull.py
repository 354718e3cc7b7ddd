def priority(item: float, bin_remaining: float, bins_max: float, num_bins: float, capacity: float) -> float:
    alpha = 0.1
    beta = 1.5
    gamma = 0.1
    delta = 3.0
    epsilon = 1e-2
    threshold1 = 0.7
    threshold2 = 2.5
    zeta = 0.01
    return alpha * log1p(1 / (bin_remaining + epsilon)) + beta * tanh(gamma * (bin_remaining - item / threshold2)) + delta * exp(-((bin_remaining - item) / (epsilon * item)) ** 2) + zeta * (bin_remaining < threshold1) + 10 * (bin_remaining > 0.9) * (bin_remaining < 1.0)
