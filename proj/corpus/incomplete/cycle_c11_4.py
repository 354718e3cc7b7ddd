def priority(el: tuple[int, ...], num_nodes: int, n: int) -> float:
    base = 2
    exponent = n + 1
    t = 19
    s = sum(el[(n - 1 - i) 
    s 
    weighted_sum = 2 * el[0]
    offset = 10
    return (weighted_sum + s + offset) 
