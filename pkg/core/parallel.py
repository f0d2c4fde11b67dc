from concurrent.futures import ProcessPoolExecutor


def ordered_map(function, items, jobs=1):
    """Map ``function`` over ``items``, in a process pool when ``jobs > 1``.

    Results come back in the order of ``items`` whatever the completion order;
    ``function`` must be picklable.
    """
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [function(item) for item in items]
    with ProcessPoolExecutor(max_workers=jobs) as executor:
        return list(executor.map(function, items))
