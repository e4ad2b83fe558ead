import itertools
def arc_spec(ext, lengths):
    """ext: 4 flags for q0..q3; edge e_i between q_{i-1}, q_i.
    returns slots {e: [prongs]} and arcs [((e,pr),(e,pr),len)]"""
    slots={}; endpoint=set()
    for i in range(4):
        fl=[(i-1)%4,i]; internal=[q for q in fl if not ext[q]]
        if not internal: endpoint.add(i); continue
        slots[i]=['u+','u-']+['q%d'%q for q in internal]
    arcs=[]
    for q in range(4):
        if not ext[q]: arcs.append(((q,'q%d'%q),((q+1)%4,'q%d'%q),lengths['q%d'%q]))
    for a,b in ((0,2),(1,3)):
        if a in endpoint and b in endpoint: continue
        if b in endpoint: arcs.append(((a,'u-'),(a,'u+'),lengths['loop']))
        elif a in endpoint: arcs.append(((b,'u-'),(b,'u+'),lengths['loop']))
        else:
            arcs.append(((a,'u+'),(b,'u-'),lengths['sheet'])); arcs.append(((a,'u-'),(b,'u+'),lengths['sheet']))
    return slots,arcs

def match(C, ext, lengths):
    slots,arcs=arc_spec(ext,lengths)
    spheres=C.sphere_components()
    punct=C.punctures()
    cu,uf=C.cusps()
    comp_of={}
    for i,c in enumerate(cu):
        for x in c: comp_of[x]=i
    sph_of={}
    for i,s in enumerate(spheres):
        for f in s: sph_of[f]=i
    # puncture -> (sphere, cusp comp, degree)
    P=[]
    for pc in punct:
        p,fi,v=pc[0]
        P.append((sph_of[(p,fi)], comp_of[(p,v)], len(pc)))
    slot_ids=sorted(slots)
    for perm in itertools.permutations(range(len(spheres))):
        if len(perm)!=len(slot_ids): return None
        s2slot={perm[k]:slot_ids[k] for k in range(len(slot_ids))}
        ok=True
        for si,e in s2slot.items():
            if len([x for x in P if x[0]==si])!=len(slots[e]): ok=False
        if not ok: continue
        # assign prongs: per sphere, punctures -> prongs
        per=[[k for k,x in enumerate(P) if x[0]==si] for si in range(len(spheres))]
        choices=[list(itertools.permutations(slots[s2slot[si]])) for si in range(len(spheres))]
        for combo in itertools.product(*choices):
            lab={}
            for si in range(len(spheres)):
                for k,pr in zip(per[si],combo[si]): lab[(s2slot[si],pr)]=k
            good=True; used=set()
            for (a,b,L) in arcs:
                ka,kb=lab[a],lab[b]
                if P[ka][1]!=P[kb][1] or len(cu[P[ka][1]])!=L: good=False;break
                used.add(P[ka][1])
            if good and len(used)==len(cu):
                return s2slot,{v:k for k,v in lab.items()},P
    return None
